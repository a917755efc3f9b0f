"""Small slopes of one-variable L-functions from factorial sums mod p.

For ``f = sum a_i x^{d_i}`` over F_p with ``p >= sum d_i`` a column of a
digit table is a vector ``k`` with ``sum d_i k_i = u p - v`` (``0 <= v < p``),
and the carries chain cyclically through a block.  Eliminating the top
exponent leaves the knapsack

    sum_{i<m} (d - d_i) k_i = d r - u p + v,    k_m = r - sum_{i<m} k_i >= 0,

whose solution set is ``C(r; u, v)``.  ``F(r; u, v)`` weights each solution
by ``prod a_i^{k_i} / k_i!``; ``F_r^s`` aggregates over s columns with
distinct u-values and signed cyclic carry patterns.  The first weight R
with ``F_R^s != 0`` gives ``lambda_s = R/(p-1)``, which is ``ord_p c_s``
whenever it is below ``1 + (s-1)/d``.

``F_r^s`` is computed from the series ``M[u][v](z) = sum_rho F(rho; u, v) z^rho``
over ``F_p[z]/(z^{R+1})``: for every set of s distinct u-values and every
permutation of it, the signed product of the entries along its cycles.
Each cycle is one block.  A block in which some row consists of the digit
``p - 1`` throughout encodes ``k = p^L - 1``, which is the zero solution
rather than a new orbit, so those configurations are removed by
inclusion-exclusion over the rows forced to ``p - 1``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import ceil

import numpy as np

from .errors import ImpossibleTerm, InvalidArgument, RegimeError
from .poly import LaurentPoly
from .polygon import NewtonPolygon, newton_polygon


@dataclass(frozen=True)
class CSolution:
    h: tuple  # h[j-1] = count of the x^j term, j = 1..len(h)
    r: int
    u: int
    v: int

    @property
    def top(self):
        """Residual count of the leading term."""
        return self.r - sum(self.h)

    def __iter__(self):
        return iter(self.h)

    def __eq__(self, other):
        if isinstance(other, (list, tuple)):
            return list(self.h) == list(other)
        if isinstance(other, CSolution):
            return (self.h, self.r, self.u, self.v) == (other.h, other.r, other.u, other.v)
        return NotImplemented

    def __hash__(self):
        return hash((self.h, self.r, self.u, self.v))


@dataclass(frozen=True)
class SlopeReport:
    s: int
    R: object  # int, or None when nothing was found below the cap
    lambda_s: object  # Fraction, or None
    status: str  # proved | inconclusive | bound-exceeded
    p: int = 0
    d: int = 0
    residue: int = 0  # F_R^s mod p
    lower_bound: object = None  # Fraction: ord c_s is at least this when not proved

    @property
    def threshold(self):
        return 1 + Fraction(self.s - 1, self.d)


@lru_cache(maxsize=None)
def factorials(p):
    """``k!`` and ``1/k!`` mod p for ``0 <= k < p``."""
    fact = [1] * p
    for k in range(1, p):
        fact[k] = fact[k - 1] * k % p
    inv = [pow(x, -1, p) for x in fact]
    return tuple(fact), tuple(inv)


def _check_1var(f):
    if not f.is_polynomial_1var or f.a != 1:
        raise RegimeError("needs a one-variable polynomial over F_p")


def normalize_shift(f):
    """``(f(x + b) - f(b), b)`` with the degree ``d-1`` coefficient cleared."""
    _check_1var(f)
    p, d = f.p, f.degree
    if d % p == 0:
        raise RegimeError(f"p = {p} divides the degree {d}")
    co = f.as_dict()
    b = (-co.get(d - 1, 0) * pow(d * co[d], -1, p)) % p
    g = f.shift(b) if b else f
    return g.without_constant(), b


def _shape(f):
    """Exponents and coefficients below the top, plus d and the top coefficient."""
    co = f.without_constant().as_dict()
    d = max(co)
    low = sorted(e for e in co if e != d)
    return d, co[d], low, [co[e] for e in low]


def regime_ok(f):
    """Whether ``p >= sum d_i`` over the non-constant exponents."""
    return f.p >= sum(e for (e,), _ in f.nonconstant_terms)


def _h_len(d, low):
    return max([d - 2] + low)


def enumerate_C(f, r, u, v):
    """All columns of weight r with carries ``(u, v)`` as CSolution objects.

    Every digit, including the residual top count, lies in ``[0, p-1]``.
    """
    _check_1var(f)
    p = f.p
    d, _, low, _ = _shape(f)
    target = d * r - u * p + v
    if target < 0 or r < 0 or not 0 <= v < p or u < 0:
        return []
    weights = [d - e for e in low]
    L = _h_len(d, low)
    out = []
    ks = [0] * len(low)

    def rec(i, left, used):
        if i == len(low):
            if left == 0 and 0 <= r - used <= p - 1:
                h = [0] * L
                for e, k in zip(low, ks):
                    h[e - 1] = k
                out.append(CSolution(tuple(h), r, u, v))
            return
        w = weights[i]
        for k in range(min(left // w, p - 1, r - used) + 1):
            ks[i] = k
            rec(i + 1, left - k * w, used + k)
        ks[i] = 0

    rec(0, target, 0)
    return out


def _column_weight(f, sol):
    p = f.p
    d, top, low, coeffs = _shape(f)
    _, inv = factorials(p)
    ks = [sol.h[e - 1] for e in low] + [sol.top]
    if any(k < 0 or k >= p for k in ks):
        raise ImpossibleTerm(f"factorial argument out of range in {sol}")
    out = 1
    for a, e in zip(coeffs + [top], ks):
        out = out * pow(a, e, p) * inv[e] % p
    return out


def F_of(f, r, u, v):
    """``F(r; u, v)`` mod p."""
    return sum(_column_weight(f, sol) for sol in enumerate_C(f, r, u, v)) % f.p


def _u_bound(f, r):
    return f.degree * r // f.p + 1


def _subsets(xs):
    for n in range(len(xs) + 1):
        yield from combinations(xs, n)


def _transfer_matrices(f, rmax, U):
    """``{A: M_A}`` with ``M_A[u, v, rho]`` the part of ``F(rho; u, v)`` whose
    digits are ``p - 1`` in every row of A (rows indexed low exponents first,
    then the top).  ``M_()`` is ``F`` itself."""
    p = f.p
    nrows = len(_shape(f)[2]) + 1
    mats = {}
    for u in range(U + 1):
        for v in range(min(U, p - 1) + 1):
            for rho in range(rmax + 1):
                for sol in enumerate_C(f, rho, u, v):
                    w = _column_weight(f, sol)
                    if not w:
                        continue
                    ks = _row_digits(f, sol)
                    full = [i for i in range(nrows) if ks[i] == p - 1]
                    for A in _subsets(full):
                        if A not in mats:
                            mats[A] = np.zeros((U + 1, U + 1, rmax + 1), dtype=np.int64)
                        mats[A][u, v, rho] = (mats[A][u, v, rho] + w) % p
    if () not in mats:
        mats[()] = np.zeros((U + 1, U + 1, rmax + 1), dtype=np.int64)
    return mats


def _row_digits(f, sol):
    low = _shape(f)[2]
    return [sol.h[e - 1] for e in low] + [sol.top]


def _poly_mul(a, b, p):
    return (np.convolve(a, b)[: len(a)]) % p


def _cycle_weight(mats, cyc, p):
    """Signed inclusion-exclusion over the rows forced to ``p - 1`` all around
    the cycle; such a row is ``k = p^L - 1``, the zero solution in disguise."""
    total = None
    for A, M in mats.items():
        acc = M[cyc[0], cyc[1 % len(cyc)]]
        for a, b in zip(cyc[1:], cyc[2:] + cyc[:1]):
            if not acc.any():
                break
            acc = _poly_mul(acc, M[a, b], p)
        if len(A) % 2:
            acc = -acc
        total = acc % p if total is None else (total + acc) % p
    return total


def _cycles_of(perm, verts):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(verts[j])
            j = perm[j]
        out.append(tuple(c))
    return out


def _canon(c):
    k = c.index(min(c))
    return c[k:] + c[:k]


def _set_sums(mats, s, p):
    """Sum over s-sets of distinct u-values and permutations of them of
    ``sign * prod(cycle weights)`` as a truncated series mod p."""
    U1, R = mats[()].shape[0], mats[()].shape[2]
    memo = {}
    out = np.zeros(R, dtype=np.int64)
    for verts in combinations(range(U1), s):
        for perm in permutations(range(s)):
            term = np.zeros(R, dtype=np.int64)
            term[0] = 1
            sgn = 1
            for c in _cycles_of(perm, verts):
                c = _canon(c)
                if c not in memo:
                    memo[c] = _cycle_weight(mats, c, p)
                term = _poly_mul(term, memo[c], p)
                if len(c) % 2 == 0:
                    sgn = -sgn
                if not term.any():
                    break
            out = (out + sgn * term) % p
    return out


def F_series(f, s, rmax, u_set_bound=None):
    """``[F_0^s, ..., F_rmax^s]`` mod p as a list of ints."""
    _check_1var(f)
    if s < 1:
        raise InvalidArgument("s must be positive")
    if s >= f.p:
        raise RegimeError("s must be smaller than p")
    U = _u_bound(f, rmax) if u_set_bound is None else u_set_bound
    U = max(U, s - 1)
    mats = _transfer_matrices(f, rmax, U)
    return [int(x) for x in _set_sums(mats, s, f.p)]


def F_r_s(f, r, s, u_set_bound=None):
    """``F_r^s`` mod p (summed over u-sets, each set counted once)."""
    return F_series(f, s, r, u_set_bound)[r]


def check_regime(f, s):
    _check_1var(f)
    d = f.degree
    if not regime_ok(f):
        raise RegimeError(f"p = {f.p} is below the sum of exponents")
    if (s - 2) * (s - 1) >= 2 * d:
        raise RegimeError(f"s = {s} is outside (s-2)(s-1) < 2d for d = {d}")
    if d % f.p == 0:
        raise RegimeError("p divides the degree")


def default_r_cap(p, d, s):
    """Largest r with ``r/(p-1) < 1 + (s-1)/d``."""
    return ceil(Fraction((p - 1) * (d + s - 1), d)) - 1


def lambda_s(f, s, r_cap=None):
    """First weight with ``F_r^s != 0`` and the resulting slope report."""
    check_regime(f, s)
    p, d = f.p, f.degree
    if r_cap is None:
        r_cap = default_r_cap(p, d, s)
    series = F_series(f, s, r_cap)
    thr = 1 + Fraction(s - 1, d)
    for R, val in enumerate(series):
        if val:
            lam = Fraction(R, p - 1)
            if lam < thr:
                return SlopeReport(s, R, lam, "proved", p, d, val)
            return SlopeReport(s, R, lam, "inconclusive", p, d, val, lower_bound=thr)
    return SlopeReport(s, None, None, "bound-exceeded", p, d,
                       lower_bound=min(thr, Fraction(r_cap + 1, p - 1)))


@dataclass(frozen=True)
class TaggedPolygon(NewtonPolygon):
    """A Newton polygon together with how it was obtained."""
    source: str = "slopes"
    reports: tuple = field(default=(), compare=False)


def _reflect(s, val, d):
    return d + 1 - s, val + Fraction(d - 1, 2) - (s - 1)


def full_np_small_d(f, p=None, oracle_fallback=True, **oracle_kw):
    """Newton polygon of ``L(f, T)`` for ``3 <= deg f <= 6`` from the lambda_s.

    Points ``(s, ord c_s)`` of ``L* = (1 - T) L`` are computed for
    ``s <= ceil((d+1)/2)`` and mirrored by the slope symmetry; the slope 0
    of the trivial factor is then removed.  A coefficient whose status is
    not proved is harmless when its mirror image is proved, or when its
    lower bound already lies above the chord ``y = (s-1)/2``; otherwise
    the oracle polygon is returned with ``source == "oracle"``.
    """
    if p is not None and p != f.p:
        f = LaurentPoly.from_terms(p, f.terms, 1, f.a)
    _check_1var(f)
    d = f.degree
    if not 3 <= d <= 6:
        raise RegimeError("full polygons need 3 <= d <= 6")
    g, _ = normalize_shift(f)
    if g.degree != d:
        raise RegimeError("shift lowered the degree")  # pragma: no cover
    S = ceil(Fraction(d + 1, 2))
    for s in range(1, S + 1):
        check_regime(g, s)
    vals = [None] * (d + 1)
    vals[0] = Fraction(0)
    reports = []
    need_oracle = False
    unproved = []
    for s in range(1, S + 1):
        rep = lambda_s(g, s)
        reports.append(rep)
        if rep.status != "proved":
            unproved.append(rep)
            continue
        for x, y in ((s, rep.lambda_s), _reflect(s, rep.lambda_s, d)):
            if vals[x] is not None and vals[x] != y:
                need_oracle = True
            vals[x] = y
    for rep in unproved:
        # harmless when the mirror coefficient is known, or when the lower
        # bound already puts the point above the chord y = (s-1)/2
        if vals[rep.s] is None and not rep.lower_bound > Fraction(rep.s - 1, 2):
            need_oracle = True
    if not need_oracle:
        poly = newton_polygon(vals).drop_slope(Fraction(0))
        return TaggedPolygon(poly.vertices, "slopes", tuple(reports))
    if not oracle_fallback:
        return TaggedPolygon((), "inconclusive", tuple(reports))
    from .oracle import l_polygon
    poly = l_polygon(f, **oracle_kw)
    return TaggedPolygon(poly.vertices, "oracle", tuple(reports))
