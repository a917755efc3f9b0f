"""Exact arithmetic in Q(zeta_p) and truncated power series over it.

A :class:`CycNum` stores integer numerators ``c_0..c_{p-2}`` over one
positive common denominator, meaning ``(sum c_i zeta^i) / den``.  Reducing
modulo ``Phi_p = 1 + x + ... + x^{p-1}`` makes this representation unique,
so equality is plain tuple comparison.

The lambda-adic valuation (``lambda = zeta - 1``, ``ord_p lambda = 1/(p-1)``)
is computed by exact repeated division, never estimated.
"""

from fractions import Fraction
from math import gcd

from .errors import (InvalidConstantTerm, NotDivisible, NotIntegral, NotInvertible,
                     PrecisionExhausted, PrimeMismatch)


class _Infinity:
    """Valuation of zero.  Compares above every number."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()


def _lcm(a, b):
    return a // gcd(a, b) * b


class CycNum:
    __slots__ = ("p", "num", "den")

    def __init__(self, p, coeffs=(), den=1):
        """``coeffs`` may have any length and may hold ints or Fractions."""
        coeffs = list(coeffs)
        if any(isinstance(c, Fraction) for c in coeffs):
            fr = [Fraction(c) for c in coeffs]
            common = 1
            for c in fr:
                common = _lcm(common, c.denominator)
            coeffs = [int(c * common) for c in fr]
            den *= common
        folded = [0] * p
        for i, c in enumerate(coeffs):
            folded[i % p] += c
        top = folded[p - 1]
        num = [c - top for c in folded[: p - 1]]
        self.p = p
        self._set(num, den)

    def _set(self, num, den):
        if den < 0:
            num, den = [-c for c in num], -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        self.num = tuple(num)
        self.den = den

    @classmethod
    def _raw(cls, p, num, den=1):
        out = cls.__new__(cls)
        out.p = p
        out._set(list(num), den)
        return out

    # -- constructors -----------------------------------------------------------
    @classmethod
    def integer(cls, p, n):
        return cls._raw(p, [n] + [0] * (p - 2))

    @classmethod
    def zeta(cls, p, i=1):
        return cls(p, [0] * (i % p) + [1])

    @classmethod
    def from_counts(cls, p, counts):
        """``sum_c counts[c] zeta^c`` for a histogram over F_p."""
        counts = [int(c) for c in counts]
        top = counts[p - 1]
        return cls._raw(p, [c - top for c in counts[: p - 1]])

    # -- accessors --------------------------------------------------------------
    @property
    def coeffs(self):
        return [Fraction(c, self.den) for c in self.num]

    def is_zero(self):
        return not any(self.num)

    def is_integral(self):
        return self.den == 1

    def rational_value(self):
        """The element as a Fraction if it lies in Q, else None."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def at_one(self):
        """Value of the representing polynomial at x = 1 (integral input)."""
        return Fraction(sum(self.num), self.den)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.num)
        if self.den != 1:
            return f"CycNum({self.p}, [{body}]/{self.den})"
        return f"CycNum({self.p}, [{body}])"

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycNum.integer(self.p, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.p, self.num, self.den))

    # -- ring operations --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.p != self.p:
                raise PrimeMismatch(f"p={self.p} vs p={other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycNum._raw(self.p, [other.numerator] + [0] * (self.p - 2), other.denominator)
        raise TypeError(f"cannot combine CycNum with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        den = _lcm(self.den, other.den)
        s, t = den // self.den, den // other.den
        return CycNum._raw(self.p, [a * s + b * t for a, b in zip(self.num, other.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.p, [-a for a in self.num], self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise NotImplementedError("negative powers")
        result = CycNum.integer(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        """Multiply by a rational scalar."""
        c = Fraction(c)
        return CycNum._raw(self.p, [a * c.numerator for a in self.num], self.den * c.denominator)

    def conj(self):
        """Image under zeta -> zeta^{-1}."""
        p = self.p
        out = [0] * p
        for i, c in enumerate(self.num):
            out[(-i) % p] += c
        return CycNum(p, out, self.den)

    def galois(self, t):
        """Image under zeta -> zeta^t, t prime to p."""
        p = self.p
        out = [0] * p
        for i, c in enumerate(self.num):
            out[(i * t) % p] += c
        return CycNum(p, out, self.den)

    # -- valuation --------------------------------------------------------------
    def lambda_valuation(self, cap=None):
        return lambda_valuation(self, cap)

    def ord_p(self, cap=None):
        v, _ = lambda_valuation(self, cap)
        return v if v is INF else Fraction(v, self.p - 1)


def cyc_mul(a, b):
    if a.p != b.p:
        raise PrimeMismatch(f"p={a.p} vs p={b.p}")
    p = a.p
    prod = [0] * p
    bn = b.num
    for i, x in enumerate(a.num):
        if x:
            for j, y in enumerate(bn):
                if y:
                    prod[(i + j) % p] += x * y
    top = prod[p - 1]
    return CycNum._raw(p, [c - top for c in prod[: p - 1]], a.den * b.den)


def lambda_valuation(a, cap=None):
    """``(v, residue)`` with ``a = lambda^v * u`` and ``u = residue mod lambda``.

    ``cap`` bounds the number of divisions; by default it is generous enough
    for any coefficient this package produces.  Reaching the cap with the
    element still divisible raises :class:`PrecisionExhausted`.
    """
    if not a.is_integral():
        raise NotIntegral("lambda-adic valuation needs integral coefficients")
    p = a.p
    if a.is_zero():
        return INF, 0
    if cap is None:
        cap = 64 * (p - 1) + max(abs(c) for c in a.num).bit_length() * (p - 1)
    c = list(a.num)
    v = 0
    while True:
        s = sum(c)
        if s % p:
            return v, s % p
        if v >= cap:
            raise PrecisionExhausted(f"lambda-adic valuation exceeds cap {cap}")
        # subtract (s/p) * Phi_p, which kills the value at 1, then divide by x - 1
        t = s // p
        full = [ci - t for ci in c] + [-t]
        quo = [0] * (p - 1)
        acc = 0
        for j in range(p - 1, 0, -1):
            acc += full[j]
            quo[j - 1] = acc
        if acc + full[0] != 0:
            raise NotDivisible("division by lambda left a remainder")  # pragma: no cover
        c = quo
        v += 1


# -- truncated power series -------------------------------------------------------

class CycSeries:
    """``c_0 + c_1 T + ... + c_D T^D`` with CycNum coefficients."""

    __slots__ = ("p", "c")

    def __init__(self, p, coeffs):
        self.p = p
        self.c = [x if isinstance(x, CycNum) else CycNum.integer(p, 0)._coerce(x) for x in coeffs]

    @property
    def D(self):
        return len(self.c) - 1

    @classmethod
    def one(cls, p, D):
        return cls(p, [1] + [0] * D)

    @classmethod
    def from_list(cls, p, values, D=None):
        values = list(values)
        if D is not None:
            values = (values + [0] * (D + 1))[: D + 1]
        return cls(p, values)

    def __getitem__(self, i):
        return self.c[i]

    def __len__(self):
        return len(self.c)

    def __eq__(self, other):
        return isinstance(other, CycSeries) and self.c == other.c

    def __repr__(self):
        return f"CycSeries(p={self.p}, D={self.D}, {self.c!r})"

    def truncate(self, D):
        return CycSeries(self.p, (self.c + [0] * (D + 1))[: D + 1])

    def __add__(self, other):
        D = min(self.D, other.D)
        return CycSeries(self.p, [self.c[i] + other.c[i] for i in range(D + 1)])

    def __sub__(self, other):
        D = min(self.D, other.D)
        return CycSeries(self.p, [self.c[i] - other.c[i] for i in range(D + 1)])

    def __mul__(self, other):
        return series_mul(self, other)

    def degree(self):
        """Largest index with a nonzero coefficient (-1 for zero)."""
        for i in range(self.D, -1, -1):
            if not self.c[i].is_zero():
                return i
        return -1

    def is_integral(self):
        return all(x.is_integral() for x in self.c)

    def scale_T(self, lam):
        """Substitute ``T -> lam * T``."""
        out, cur = [], CycNum.integer(self.p, 1)
        for x in self.c:
            out.append(x * cur)
            cur = cur * lam
        return CycSeries(self.p, out)

    def valuations(self, cap=None):
        """Lambda-adic valuations of the coefficients (INF for zeros)."""
        return [lambda_valuation(x, cap)[0] for x in self.c]

    def ord_p(self, cap=None):
        return [v if v is INF else Fraction(v, self.p - 1) for v in self.valuations(cap)]


def series_mul(a, b):
    if a.p != b.p:
        raise PrimeMismatch("series over different primes")
    D = min(a.D, b.D)
    zero = CycNum.integer(a.p, 0)
    out = [zero] * (D + 1)
    for i in range(D + 1):
        if a.c[i].is_zero():
            continue
        for j in range(D + 1 - i):
            if not b.c[j].is_zero():
                out[i + j] = out[i + j] + a.c[i] * b.c[j]
    return CycSeries(a.p, out)


def _inverse_constant(c):
    """Inverse of a constant term; only rational constants are supported."""
    r = c.rational_value()
    if r is None or r == 0:
        # general elements: invert via the norm-free linear solve is not needed here
        if r == 0:
            raise NotInvertible("constant term is zero")
        raise NotInvertible("constant term is not rational")
    return 1 / r


def series_inverse(s):
    if s.c[0].is_zero():
        raise NotInvertible("constant term is zero")
    inv0 = _inverse_constant(s.c[0])
    out = [CycNum.integer(s.p, 0)._coerce(inv0)]
    for n in range(1, s.D + 1):
        acc = CycNum.integer(s.p, 0)
        for k in range(1, n + 1):
            if not s.c[k].is_zero():
                acc = acc + s.c[k] * out[n - k]
        out.append(-(acc.scale(inv0)))
    return CycSeries(s.p, out)


def series_exp(s):
    """exp of a series with zero constant term, via ``n e_n = sum k s_k e_{n-k}``."""
    if not s.c[0].is_zero():
        raise InvalidConstantTerm("series_exp needs a zero constant term")
    p = s.p
    e = [CycNum.integer(p, 1)]
    ks = [x.scale(k) for k, x in enumerate(s.c)]
    for n in range(1, s.D + 1):
        acc = CycNum.integer(p, 0)
        for k in range(1, n + 1):
            if not ks[k].is_zero():
                acc = acc + ks[k] * e[n - k]
        e.append(acc.scale(Fraction(1, n)))
    return CycSeries(p, e)


def series_log(s):
    """log of a series with constant term 1, via ``n l_n = n s_n - sum k l_k s_{n-k}``."""
    if s.c[0] != CycNum.integer(s.p, 1):
        raise InvalidConstantTerm("series_log needs constant term 1")
    p = s.p
    lg = [CycNum.integer(p, 0)]
    for n in range(1, s.D + 1):
        acc = s.c[n].scale(n)
        for k in range(1, n):
            if not s.c[n - k].is_zero():
                acc = acc - lg[k].scale(k) * s.c[n - k]
        lg.append(acc.scale(Fraction(1, n)))
    return CycSeries(p, lg)


def power_sums_to_series(p, sums, sign=1):
    """``exp(sign * sum_k S_k T^k / k)`` for ``sums = [S_1, S_2, ...]``."""
    coeffs = [CycNum.integer(p, 0)]
    for k, S in enumerate(sums, start=1):
        coeffs.append(S.scale(Fraction(sign, k)))
    return series_exp(CycSeries(p, coeffs))


def divide_linear(s, root):
    """Exact quotient of ``s`` by ``1 - root*T``; the last coefficient must vanish."""
    if not isinstance(root, CycNum):
        root = CycNum.integer(s.p, root)
    out = []
    prev = CycNum.integer(s.p, 0)
    for x in s.c:
        cur = x + root * prev
        out.append(cur)
        prev = cur
    if not out[-1].is_zero():
        raise NotDivisible("series is not divisible by the linear factor")
    return CycSeries(s.p, out[:-1])
