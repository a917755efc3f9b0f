"""Laurent polynomials with prime-field coefficients.

A :class:`LaurentPoly` is a finite list of monomials ``a_j x^{V_j}`` in at
most two variables.  The ground field is ``F_q`` with ``q = p^a``; the
coefficients are restricted to the prime field, which is all the
examples here need and keeps the Teichmuller lifts integral.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InvalidArgument, ParseError, Unsupported

VARS = "xy"


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points):
    """Vertices of the convex hull, counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for pt in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    for pt in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    return lower[:-1] + upper[:-1]


def _on_segment(pt, a, b):
    if _cross(a, b, pt) != 0:
        return False
    return (min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))


@dataclass(frozen=True)
class LaurentPoly:
    p: int
    n: int
    terms: tuple  # ((exponent tuple, coefficient in 1..p-1), ...), sorted descending
    a: int = 1

    @classmethod
    def from_terms(cls, p, terms, n=None, a=1):
        """Build from ``(exponents, coeff)`` pairs, merging repeats mod ``p``."""
        acc = {}
        for exps, c in terms:
            exps = (exps,) if isinstance(exps, int) else tuple(int(e) for e in exps)
            acc[exps] = (acc.get(exps, 0) + int(c)) % p
        if n is None:
            n = max((len(e) for e in acc), default=1)
        if n not in (1, 2):
            raise Unsupported("only one or two variables are supported")
        clean = []
        for exps, c in acc.items():
            if len(exps) != n:
                raise InvalidArgument("inconsistent number of variables")
            if c:
                clean.append((exps, c))
        clean.sort(reverse=True)
        return cls(p, n, tuple(clean), a)

    @classmethod
    def univariate(cls, p, coeffs, a=1):
        """From a mapping or list ``{exponent: coefficient}``."""
        if not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        return cls.from_terms(p, [((e,), c) for e, c in coeffs.items()], 1, a)

    @property
    def q(self):
        return self.p**self.a

    @property
    def constant(self):
        zero = (0,) * self.n
        for e, c in self.terms:
            if e == zero:
                return c
        return 0

    def without_constant(self):
        zero = (0,) * self.n
        return LaurentPoly(self.p, self.n, tuple(t for t in self.terms if t[0] != zero), self.a)

    @property
    def nonconstant_terms(self):
        zero = (0,) * self.n
        return [t for t in self.terms if t[0] != zero]

    @property
    def m(self):
        return len(self.nonconstant_terms)

    def exponent_columns(self):
        """The vectors V_1..V_m of the non-constant terms, ascending order."""
        return [e for e, _ in reversed(self.nonconstant_terms)]

    def coefficients(self):
        """Coefficients matching :meth:`exponent_columns`."""
        return [c for _, c in reversed(self.nonconstant_terms)]

    # -- one-variable polynomial mode -----------------------------------------
    @property
    def is_polynomial_1var(self):
        return self.n == 1 and all(e[0] >= 0 for e, _ in self.terms) and bool(self.terms)

    @property
    def degree(self):
        if self.n != 1:
            raise Unsupported("degree is defined for one variable")
        return max((e[0] for e, _ in self.terms), default=0)

    def as_dict(self):
        if self.n != 1:
            raise Unsupported("one variable only")
        return {e[0]: c for e, c in self.terms}

    def shift(self, b):
        """``f(x + b)`` for a one-variable polynomial."""
        if not self.is_polynomial_1var:
            raise Unsupported("shift needs a one-variable polynomial")
        p = self.p
        out = {}
        for e, c in self.terms:
            d = e[0]
            for i in range(d + 1):
                out[i] = (out.get(i, 0) + c * comb(d, i) * pow(b, d - i, p)) % p
        return LaurentPoly.univariate(p, out, self.a)

    def add_constant(self, c):
        return LaurentPoly.from_terms(self.p, list(self.terms) + [((0,) * self.n, c)], self.n, self.a)

    # -- Newton polytope -------------------------------------------------------
    def polytope_points(self):
        return [(0,) * self.n] + [e for e, _ in self.terms]

    def normalized_volume(self):
        """``n! V(f)`` where V is the volume of the hull of 0 and the exponents."""
        pts = self.polytope_points()
        if self.n == 1:
            xs = [e[0] for e in pts]
            return max(xs) - min(xs)
        hull = convex_hull_2d(pts)
        if len(hull) < 3:
            return 0
        twice = 0
        for i, u in enumerate(hull):
            v = hull[(i + 1) % len(hull)]
            twice += u[0] * v[1] - u[1] * v[0]
        return abs(twice)

    def volume(self):
        return Fraction(self.normalized_volume(), factorial(self.n))

    def faces_without_origin(self):
        """Closed faces of the polytope avoiding 0, as sets of exponent vectors."""
        origin = (0,) * self.n
        exps = [e for e, _ in self.terms]
        pts = self.polytope_points()
        faces = []
        if self.n == 1:
            xs = [e[0] for e in pts]
            for end in {min(xs), max(xs)}:
                if end != 0:
                    faces.append({(end,)})
            return faces
        hull = convex_hull_2d(pts)
        for v in hull:
            if v != origin:
                faces.append({v})
        if len(hull) >= 3:
            for i, u in enumerate(hull):
                w = hull[(i + 1) % len(hull)]
                if not _on_segment(origin, u, w):
                    faces.append({e for e in exps if _on_segment(e, u, w)})
        return faces

    def restrict(self, face):
        return LaurentPoly(self.p, self.n, tuple(t for t in self.terms if t[0] in face), self.a)

    def is_diagonal(self):
        """Exactly n non-constant terms spanning an n-dimensional simplex."""
        cols = self.exponent_columns()
        if len(cols) != self.n:
            return False
        if self.n == 1:
            return cols[0][0] != 0
        (a, b), (c, d) = cols
        return a * d - b * c != 0

    def diagonal_degree(self):
        """|det V| for a diagonal f (the normalized volume)."""
        return self.normalized_volume()

    # -- text ------------------------------------------------------------------
    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.terms:
            mono = []
            for v, e in zip(VARS, exps):
                if e == 1:
                    mono.append(v)
                elif e != 0:
                    mono.append(f"{v}^{e}" if e > 0 else f"{v}^({e})")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            else:
                parts.append(f"{c}*" + "*".join(mono))
        return " + ".join(parts)

    def __str__(self):
        return self.text()


def parse_poly(text, p, a=1, warnings=None):
    """Parse ``"x^3+2x"``, ``"x^3 + x*y + y^2"``, ``"x^(-1) + x"`` etc.

    Coefficients are integers reduced mod ``p``.  When a written term
    vanishes after reduction (or merging) a message is appended to
    ``warnings`` if a list is supplied.
    """
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial", 0)
    pos = 0
    raw = []
    uses_y = "y" in s

    def number():
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected a number", pos)
        return int(s[start:pos])

    def exponent():
        nonlocal pos
        if pos < len(s) and s[pos] == "^":
            pos += 1
            if pos < len(s) and s[pos] == "(":
                pos += 1
                sign = 1
                if pos < len(s) and s[pos] in "+-":
                    sign = -1 if s[pos] == "-" else 1
                    pos += 1
                e = sign * number()
                if pos >= len(s) or s[pos] != ")":
                    raise ParseError("expected ')'", pos)
                pos += 1
                return e
            if pos < len(s) and s[pos] == "-":
                pos += 1
                return -number()
            return number()
        return 1

    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif raw:
            raise ParseError("expected '+' or '-'", pos)
        coeff = 1
        if pos < len(s) and s[pos].isdigit():
            coeff = number()
            if pos < len(s) and s[pos] == "*":
                pos += 1
        exps = [0, 0]
        seen_var = False
        while pos < len(s) and s[pos] in VARS:
            v = VARS.index(s[pos])
            pos += 1
            exps[v] += exponent()
            seen_var = True
            if pos < len(s) and s[pos] == "*":
                pos += 1
                if pos >= len(s) or s[pos] not in VARS:
                    raise ParseError("expected a variable after '*'", pos)
        if pos < len(s) and s[pos] not in "+-":
            raise ParseError(f"unexpected character {s[pos]!r}", pos)
        if not seen_var and coeff == 1 and (pos == 0 or not s[pos - 1].isdigit()):
            raise ParseError("empty term", pos)
        raw.append((tuple(exps[:2] if uses_y else exps[:1]), sign * coeff))
    f = LaurentPoly.from_terms(p, raw, 2 if uses_y else 1, a)
    if warnings is not None:
        kept = {e for e, _ in f.terms}
        for exps, c in raw:
            if exps not in kept:
                warnings.append(f"term with exponent {exps} vanishes mod {p}")
    return f
