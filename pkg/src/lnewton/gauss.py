"""Gauss sums in the ramified local ring ``Z_q[pi]``, ``pi^{p-1} = -p``.

An element is ``sum_{i<p-1} b_i pi^i`` with every ``b_i`` in the unramified
ring ``Z_q = Z_p[X]/(lift of the F_q modulus)``, stored modulo ``p^N``.
That makes the ring exact modulo ``pi^{N(p-1)}``; ``prec`` is this bound
and every valuation below it is exact.

On top of the ring sit the Teichmuller lift, the local ``zeta_p``, Gauss
sums ``G_k(q) = -sum chi(a)^{-k} zeta^{Tr a}``, and the identity checks
(interpolation, Gross-Koblitz, Hasse-Davenport, the Gauss-sum expansion
of ``S_k^*`` and the orbit products for L-functions).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .congruence import exact_period_mask, kernel_array, lexmin_rotation
from .cyclotomic import CycNum
from .errors import (IdentityViolation, InsufficientTruncation, InternalError,
                     InvalidArgument, NotDiagonal, NotInvertible, PrecisionExhausted,
                     SizeExceeded)
from .ffield import build_field, trace_log_table

GAUSS_BUDGET = 2 * 10**5


def digit_sum(k, p):
    s = 0
    while k:
        k, r = divmod(k, p)
        s += r
    return s


class LocalRing:
    """``Z_q[pi]`` modulo ``p^N`` with ``q = p^a`` and ``N = ceil(M/(p-1))``."""

    def __init__(self, p, a=1, M=None):
        if M is None:
            M = 4 * (p - 1)
        self.p, self.a = p, a
        self.N = -(-M // (p - 1))
        self.M = M
        self.prec = self.N * (p - 1)
        self.P = p**self.N
        self.field = build_field(p, a)
        self.modulus = list(self.field.modulus)

    def __repr__(self):
        return f"LocalRing(p={self.p}, a={self.a}, prec={self.prec})"

    def __eq__(self, other):
        return isinstance(other, LocalRing) and (self.p, self.a, self.N) == (other.p, other.a, other.N)

    def __hash__(self):
        return hash((self.p, self.a, self.N))

    # -- the unramified coefficient ring -----------------------------------------
    def zq(self, x):
        if isinstance(x, int):
            return (x % self.P,) + (0,) * (self.a - 1)
        return tuple(int(c) % self.P for c in x)

    def zq_mul(self, x, y):
        P, a = self.P, self.a
        if a == 1:
            return (x[0] * y[0] % P,)
        prod = [0] * (2 * a - 1)
        for i, u in enumerate(x):
            if u:
                for j, v in enumerate(y):
                    prod[i + j] += u * v
        mod = self.modulus
        for top in range(2 * a - 2, a - 1, -1):
            c = prod[top]
            if c:
                for i in range(a):
                    prod[top - a + i] -= c * mod[i]
        return tuple(c % P for c in prod[:a])

    def zq_inv(self, x):
        """Inverse of a unit of Z_q by Newton iteration from the residue inverse."""
        p = self.p
        res = tuple(c % p for c in x)
        if not any(res):
            raise NotInvertible("not a unit in Z_q")
        y = self.zq(self.field.inv(res))
        two = self.zq(2)
        for _ in range(self.N.bit_length() + 2):
            xy = self.zq_mul(x, y)
            y = self.zq_mul(y, tuple((t - s) % self.P for t, s in zip(two, xy)))
        return y

    # -- constructors -------------------------------------------------------------
    def elem(self, coeffs):
        coeffs = list(coeffs) + [0] * (self.p - 1 - len(coeffs))
        return LocalElem(self, tuple(self.zq(c) for c in coeffs))

    def from_int(self, n):
        n = Fraction(n)
        if n.denominator % self.p == 0:
            raise InvalidArgument("denominator divisible by p")
        x = self.elem([n.numerator])
        if n.denominator != 1:
            x = x * self.elem([pow(n.denominator, -1, self.P)])
        return x

    @property
    def zero(self):
        return self.elem([])

    @property
    def one(self):
        return self.elem([1])

    @property
    def pi(self):
        return self.elem([0, 1]) if self.p > 2 else self.elem([-2])

    def teichmuller(self, residue):
        """Lift of a nonzero F_q element to a (q-1)-st root of unity."""
        res = self.field.elem(residue)
        x = self.zq(res)
        q = self.field.q
        for _ in range(self.N + 2):
            y = self._zq_pow(x, q)
            if y == x:
                return LocalElem(self, (x,) + ((0,) * self.a,) * (self.p - 2))
            x = y
        raise PrecisionExhausted("Teichmuller iteration did not converge")

    def _zq_pow(self, x, e):
        out = self.zq(1)
        while e:
            if e & 1:
                out = self.zq_mul(out, x)
            x = self.zq_mul(x, x)
            e >>= 1
        return out

    def teichmuller_int(self, c):
        """Teichmuller lift of ``c in F_p^*`` as an integer mod ``p^N``."""
        return pow(c % self.p, self.p ** (self.N - 1), self.P)

    @property
    def zeta(self):
        return zeta_p_local(self)

    def embed(self, x):
        """Move an element of ``Z_p[pi]`` (any a) into this ring."""
        if x.ring.p != self.p or x.ring.N < self.N:
            raise InvalidArgument("cannot embed: incompatible ring")
        return self.elem([b[0] for b in x.c])

    def from_cyc(self, z):
        """Image of a CycNum under ``zeta_p -> zeta_p_local``."""
        if z.den % self.p == 0:
            raise InvalidArgument("denominator divisible by p")
        pw = zeta_powers(self)
        acc = self.zero
        for i, c in enumerate(z.num):
            if c:
                acc = acc + pw[i].scale(c)
        if z.den != 1:
            acc = acc.scale(pow(z.den, -1, self.P))
        return acc


class LocalElem:
    __slots__ = ("ring", "c")

    def __init__(self, ring, c):
        self.ring = ring
        self.c = c

    def __repr__(self):
        if self.ring.a == 1:
            return f"LocalElem({[b[0] for b in self.c]} mod p^{self.ring.N})"
        return f"LocalElem({list(self.c)} mod p^{self.ring.N})"

    def __eq__(self, other):
        return isinstance(other, LocalElem) and self.c == other.c and self.ring == other.ring

    def __hash__(self):
        return hash(self.c)

    def _lift(self, other):
        if isinstance(other, LocalElem):
            return other
        return self.ring.from_int(other)

    def __add__(self, other):
        other = self._lift(other)
        P = self.ring.P
        return LocalElem(self.ring, tuple(tuple((u + v) % P for u, v in zip(x, y))
                                          for x, y in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        P = self.ring.P
        return LocalElem(self.ring, tuple(tuple(-u % P for u in x) for x in self.c))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, n):
        """Multiply by an integer."""
        P = self.ring.P
        return LocalElem(self.ring, tuple(tuple(u * n % P for u in x) for x in self.c))

    def scale_zq(self, s):
        """Multiply by an element of the unramified ring."""
        R = self.ring
        return LocalElem(R, tuple(R.zq_mul(x, s) for x in self.c))

    def __mul__(self, other):
        other = self._lift(other)
        R = self.ring
        p, P, a = R.p, R.P, R.a
        e = p - 1
        if a == 1:
            acc = [0] * e
            for i, (x,) in enumerate(self.c):
                if x:
                    for j, (y,) in enumerate(other.c):
                        if y:
                            t = i + j
                            if t >= e:
                                acc[t - e] -= p * x * y
                            else:
                                acc[t] += x * y
            return LocalElem(R, tuple((v % P,) for v in acc))
        acc = [[0] * a for _ in range(e)]
        for i, x in enumerate(self.c):
            if not any(x):
                continue
            for j, y in enumerate(other.c):
                if not any(y):
                    continue
                xy = R.zq_mul(x, y)
                t = i + j
                if t >= e:
                    row = acc[t - e]
                    for s in range(a):
                        row[s] -= p * xy[s]
                else:
                    row = acc[t]
                    for s in range(a):
                        row[s] += xy[s]
        return LocalElem(R, tuple(tuple(v % P for v in row) for row in acc))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return not any(any(x) for x in self.c)

    def valuation(self):
        """pi-adic valuation; PrecisionExhausted if zero at this precision."""
        p = self.ring.p
        best = None
        for i, x in enumerate(self.c):
            for u in x:
                if u:
                    v = 0
                    while u % p == 0:
                        u //= p
                        v += 1
                    val = i + (p - 1) * v
                    if best is None or val < best:
                        best = val
        if best is None:
            raise PrecisionExhausted(f"element is zero modulo pi^{self.ring.prec}")
        return best

    def leading(self):
        """``(v, u)`` with ``self = pi^v * unit`` and ``u`` the unit's residue in F_q."""
        v = self.valuation()
        p = self.ring.p
        i, e = v % (p - 1), v // (p - 1)
        sign = -1 if e % 2 else 1
        # p^e = (-1)^e pi^{(p-1)e}
        return v, tuple(sign * (u // p**e) % p for u in self.c[i])

    def residue(self):
        return tuple(u % self.ring.p for u in self.c[0])

    def inverse(self):
        R = self.ring
        if self.residue() == (0,) * R.a:
            raise NotInvertible("not a unit")
        y = R.elem([R.zq_inv(self.c[0])])
        two = R.from_int(2)
        for _ in range(R.prec.bit_length() + 2):
            y = y * (two - self * y)
        return y

    def project(self):
        """The same element in ``Z_p[pi]``; the unramified components must vanish."""
        R = self.ring
        if R.a == 1:
            return self
        if any(any(x[1:]) for x in self.c):
            raise IdentityViolation("element is not fixed by Frobenius")
        return base_ring(R).elem([x[0] for x in self.c])


@lru_cache(maxsize=None)
def local_ring(p, a=1, M=None):
    return LocalRing(p, a, M)


def base_ring(R):
    return local_ring(R.p, 1, R.prec)


@lru_cache(maxsize=None)
def zeta_p_local(R):
    """The root of ``Phi_p`` congruent to ``1 + pi`` modulo ``pi^2``.

    Write ``zeta = 1 + pi w``; then ``Phi_p(zeta) = 0`` becomes
    ``w^{p-1} = sum_{j=1}^{p-1} (C(p,j)/p) pi^{j-1} w^{j-1}``, which has a
    simple root ``w = 1`` modulo ``pi``.  Newton's method lifts it.
    """
    p = R.p
    pi = R.pi
    cj = [R.from_int(comb(p, j) // p) for j in range(p)]
    pipows = [R.one]
    for _ in range(p):
        pipows.append(pipows[-1] * pi)

    def h(w):
        acc = w ** (p - 1)
        wp = R.one
        for j in range(1, p):
            acc = acc - cj[j] * pipows[j - 1] * wp
            wp = wp * w
        return acc

    def dh(w):
        acc = (w ** (p - 2)).scale(p - 1)
        wp = R.one
        for j in range(2, p):
            acc = acc - (cj[j] * pipows[j - 1] * wp).scale(j - 1)
            wp = wp * w
        return acc

    w = R.one
    for _ in range(R.prec.bit_length() + 4):
        nxt = w - h(w) * dh(w).inverse()
        if nxt == w:
            break
        w = nxt
    else:
        raise InternalError("Hensel lifting of zeta_p did not converge")
    z = R.one + pi * w
    phi = R.zero
    zp = R.one
    for _ in range(p):
        phi = phi + zp
        zp = zp * z
    if not phi.is_zero() or (z - R.one).valuation() != 1 or zp != R.one:
        raise InternalError("local zeta_p failed its defining checks")
    return z


@lru_cache(maxsize=None)
def zeta_powers(R):
    z = zeta_p_local(R)
    out = [R.one]
    for _ in range(R.p - 1):
        out.append(out[-1] * z)
    return tuple(out)


# -- Gauss sums -------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussSum:
    q: int
    k: int
    value: LocalElem  # in Z_p[pi]
    valuation: int


@lru_cache(maxsize=None)
def _teich_power_table(R):
    """``omega(g)^j`` for ``0 <= j <= q-2`` as an integer array (q-1, a)."""
    F = R.field
    n = F.q - 1
    w = R.teichmuller(F.generator).c[0]
    out = np.empty((n, R.a), dtype=object if R.P >= 2**31 else np.int64)
    cur = R.zq(1)
    for j in range(n):
        out[j] = cur
        cur = R.zq_mul(cur, w)
    return out


class GaussTable:
    """Lazily evaluated ``G_k(p^a)`` projected to ``Z_p[pi]``.

    Uses buckets by trace value: ``G_k = -sum_c zeta^c sum_{Tr(g^e)=c} omega^{-ke}``,
    so each k costs one pass over ``F_q^*``.
    """

    def __init__(self, p, a, M=None):
        q = p**a
        if q - 1 > GAUSS_BUDGET:
            raise SizeExceeded(f"q = {q} too large for direct Gauss sums")
        if M is None:
            M = max(4 * (p - 1), (a + 1) * (p - 1))
        self.p, self.a, self.q = p, a, q
        self.R = local_ring(p, a, M)
        self.base = base_ring(self.R)
        self._zeta = [self.R.embed(z) for z in zeta_powers(self.base)]
        T = np.asarray(trace_log_table(self.R.field), dtype=np.int64)
        self._masks = [np.flatnonzero(T == c) for c in range(p)]
        self._pows = _teich_power_table(self.R)
        self._cache = {}

    def __getitem__(self, k):
        if k not in self._cache:
            self._cache[k] = self._compute(k)
        return self._cache[k]

    def __len__(self):
        return self.q - 1

    def __iter__(self):
        return (self[k] for k in range(self.q - 1))

    def _compute(self, k):
        R, n = self.R, self.q - 1
        acc = R.zero
        for c, idx in enumerate(self._masks):
            if idx.size == 0:
                continue
            bucket = self._pows[(-k * idx) % n]
            s = tuple(int(x) % R.P for x in bucket.sum(axis=0))
            acc = acc + self._zeta[c].scale_zq(s)
        g = (-acc).project()
        return GaussSum(self.q, k, g, g.valuation())


@lru_cache(maxsize=None)
def gauss_sums(p, a, M=None):
    """Table of ``G_k(p^a)``, indexable by ``k`` in ``[0, q-2]``."""
    return GaussTable(p, a, M)


def gauss_sum(p, a, k, M=None):
    q = p**a
    if not 0 <= k <= q - 2:
        raise InvalidArgument("k must lie in [0, q-2]")
    return gauss_sums(p, a, M)[k]


def padic_gamma_mod_p(p, x):
    """Morita's ``Gamma_p(x) mod p`` for a rational with p-free denominator."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise InvalidArgument("denominator divisible by p")
    r = x.numerator * pow(x.denominator, -1, p) % p
    if r == 0:
        return 1
    acc = 1
    for j in range(1, r):
        acc = acc * j % p
    return (-1) ** r * acc % p


def frac_part(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def gross_koblitz_check(p, a, k=None, M=None):
    """Valuation and unit-part test of every (or one) ``G_k(p^a)``."""
    q = p**a
    ks = range(q - 1) if k is None else [k]
    rows = []
    for kk in ks:
        G = gauss_sum(p, a, kk, M)
        sigma = _sigma_a(kk, p, a)
        v, unit = G.value.leading()
        expect = 1
        for j in range(a):
            expect = expect * padic_gamma_mod_p(p, frac_part(Fraction(p**j * kk, q - 1))) % p
        row = {"q": q, "k": kk, "valuation": v, "sigma": sigma,
               "unit": unit[0], "gamma_product": expect,
               "ok": v == sigma and unit[0] == expect}
        if not row["ok"]:
            raise IdentityViolation(f"Gross-Koblitz fails at q={q}, k={kk}: {row}")
        rows.append(row)
    return rows


def _sigma_a(k, p, a):
    s = 0
    for _ in range(a):
        k, r = divmod(k, p)
        s += r
    return s


def hasse_davenport_check(p, a, d, k, M=None):
    """``G_{r(q^{dk}-1)}(q^{dk}) = G_{r(q^d-1)}(q^d)^k`` for all r at level d."""
    q = p**a
    small = gauss_sums(p, a * d, M)
    big = gauss_sums(p, a * d * k, M)
    n1, n2 = q**d - 1, q ** (d * k) - 1
    R = small[0].value.ring
    Rb = big[0].value.ring
    bad = []
    for j in range(n1):
        lhs = big[j * (n2 // n1)].value
        rhs = small[j].value ** k
        prec = min(R.prec, Rb.prec)
        lhs_, rhs_ = local_ring(p, 1, prec).embed(lhs), local_ring(p, 1, prec).embed(rhs)
        if lhs_ != rhs_:
            bad.append(j)
    if bad:
        raise IdentityViolation(f"Hasse-Davenport fails for r*(q^d-1) in {bad[:5]}")
    return {"q": q, "d": d, "k": k, "checked": n1, "ok": True}


def interpolation_check(p, a, M=None):
    """``zeta^{Tr a} = sum_k G_k/(1-q) chi(a)^k`` for all a in F_q^*."""
    q = p**a
    G = gauss_sums(p, a, M)
    R = local_ring(p, a, G[0].value.ring.prec)
    zp = zeta_powers(base_ring(R))
    F = R.field
    T = trace_log_table(F)
    pows = _teich_power_table(R)
    inv = R.from_int(Fraction(1, 1 - q))
    Gs = [R.embed(g.value) for g in G]
    n = q - 1
    worst = None
    for e in range(n):
        rhs = R.zero
        for k in range(n):
            rhs = rhs + Gs[k].scale_zq(tuple(int(x) for x in pows[(k * e) % n]))
        rhs = rhs * inv
        lhs = R.embed(zp[int(T[e])])
        diff = lhs - rhs
        if not diff.is_zero():
            v = diff.valuation()
            worst = v if worst is None else min(worst, v)
    if worst is not None:
        raise IdentityViolation(f"interpolation fails with deviation valuation {worst}")
    return {"q": q, "checked": n, "precision": R.prec, "ok": True}


# -- exponential sums and L-functions from Gauss sums -------------------------------------

def _char_values(R, coeffs, K):
    """``prod_i chi(a_i)^{k_i}`` (integers mod p^N) for rows of K."""
    out = np.ones(K.shape[0], dtype=object)
    for c, col in zip(coeffs, K.T):
        t = R.teichmuller_int(c)
        out = out * np.array([pow(t, int(k), R.P) for k in col], dtype=object) % R.P
    return out


def exp_sum_via_gauss(f, k, M=None):
    """``S_k^*(f)`` through the Gauss-sum expansion, as an element of ``Z_p[pi]``."""
    if f.a != 1:
        raise InvalidArgument("Gauss-sum path supports coefficients over q = p")
    p = f.p
    G = gauss_sums(p, k, M)
    R = G.base
    N = p**k - 1
    cols = f.exponent_columns()
    coeffs = f.coefficients()
    n, m = f.n, len(cols)
    if m == 0:
        return R.from_int((p**k - 1) ** n)
    K = kernel_array(cols, N)
    chis = _char_values(R, coeffs, K)
    acc = R.zero
    for row, chi in zip(K.tolist(), chis):
        term = R.from_int(int(chi))
        for kk in row:
            term = term * G[kk].value
        acc = acc + term
    scale = R.from_int(1 - p**k) ** (n - m) if m <= n else R.from_int(1 - p**k).inverse() ** (m - n)
    out = acc * scale
    if f.constant:
        out = out * zeta_powers(R)[(k * f.constant) % p]
    return out.scale(-1) if n % 2 else out


def orbit_factors(f, d_max, M=None, stop_at=None):
    """``(d, X_O)`` for every q-orbit O of S_p(q, d), d <= d_max (q = p)."""
    p = f.p
    cols = f.exponent_columns()
    coeffs = f.coefficients()
    out = []
    for d in range(1, d_max + 1):
        if stop_at is not None and sum(x[0] for x in out) >= stop_at:
            break
        G = gauss_sums(p, d, M)
        R = G.base
        K = kernel_array(cols, p**d - 1)
        K = K[exact_period_mask(K, p, d)]
        K = K[np.all(lexmin_rotation(K, p, d) == K, axis=1)]
        chis = _char_values(R, coeffs, K)
        for row, chi in zip(K.tolist(), chis):
            X = R.from_int(int(chi))
            for kk in row:
                X = X * G[kk].value
            out.append((d, tuple(row), X))
    return out


def _series_mul_binomial(series, d, Y, D):
    """Multiply a coefficient list by ``1 - Y T^d`` truncated at T^D."""
    out = list(series)
    for i in range(D, d - 1, -1):
        out[i] = out[i] - Y * series[i - d]
    return out


def _common_ring(p, prec):
    return local_ring(p, 1, prec)


def wan_diagonal_lfunction(f, d_max=None, M=None):
    """Orbit product for a diagonal f: the sign-adjusted ``L*`` as a polynomial."""
    if not f.is_diagonal():
        raise NotDiagonal("f needs exactly n non-constant terms spanning a simplex")
    if f.constant:
        raise InvalidArgument("drop the constant term first")
    deg = f.normalized_volume()
    if d_max is None:
        d_max = deg
    facs = orbit_factors(f, d_max, M, stop_at=deg)
    prec = min(X.ring.prec for _, _, X in facs)
    R = _common_ring(f.p, prec)
    series = [R.one] + [R.zero] * deg
    total = 0
    for d, _, X in facs:
        series = _series_mul_binomial(series, d, R.embed(X), deg)
        total += d
    if total != deg:
        raise InternalError(f"orbit lengths sum to {total}, expected {deg}")
    return series


def theorem12_truncated_product(f, D, d_max=None, h_max=None, val_cutoff=None, M=None):
    """Truncated orbit product for ``m > n``, correct modulo ``pi^{val_cutoff}``.

    Each factor ``(1 - q^{dh} T^d X_O)`` raised to ``C(h+m-n-1, m-n-1)``.
    Orbits of level ``d > D`` never reach ``T^D``.  Dropping all ``h > h_max``
    changes coefficients only by multiples of ``q^{h_max+1}``, i.e. at
    valuation ``>= (h_max+1)(p-1)`` in pi-units.
    """
    p = f.p
    m, n = f.m, f.n
    if m <= n:
        raise InvalidArgument("needs m > n")
    if d_max is None:
        d_max = D
    if val_cutoff is None:
        val_cutoff = 2 * (p - 1)
    if h_max is None:
        h_max = -(-val_cutoff // (p - 1)) - 1
    if (h_max + 1) * (p - 1) < val_cutoff:
        raise InsufficientTruncation(
            f"h_max={h_max} only guarantees pi^{(h_max + 1) * (p - 1)} < pi^{val_cutoff}")
    facs = orbit_factors(f, min(d_max, D), M)
    prec = min(X.ring.prec for _, _, X in facs)
    if prec < val_cutoff:
        raise InsufficientTruncation("working precision below the cutoff")
    R = _common_ring(p, prec)
    series = [R.one] + [R.zero] * D
    for d, _, X in facs:
        X = R.embed(X)
        for h in range(h_max + 1):
            e = comb(h + m - n - 1, m - n - 1)
            Y = X.scale(p ** (d * h))
            for _ in range(e):
                series = _series_mul_binomial(series, d, Y, D)
    if f.constant:
        zc = zeta_powers(R)[f.constant % p]
        cur = R.one
        for i in range(len(series)):
            series[i] = series[i] * cur
            cur = cur * zc
    return series


def diagonal_slopes(f):
    """Slopes of the sign-adjusted ``L*`` of a diagonal f from orbit valuations alone.

    Each orbit of length d contributes d slopes ``sum_i sigma(k_i) / (d (p-1))``.
    """
    if not f.is_diagonal():
        raise NotDiagonal("f is not diagonal")
    p = f.p
    cols = f.exponent_columns()
    deg = f.normalized_volume()
    out = []
    d = 1
    while len(out) < deg:
        K = kernel_array(cols, p**d - 1)
        K = K[exact_period_mask(K, p, d)]
        K = K[np.all(lexmin_rotation(K, p, d) == K, axis=1)]
        for row in K.tolist():
            w = sum(_sigma_a(k, p, d) for k in row)
            out.extend([Fraction(w, d * (p - 1))] * d)
        d += 1
        if d > deg + 1:
            raise InternalError("orbit count does not match the degree")
    return sorted(out)
