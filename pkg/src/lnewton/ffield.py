"""Finite fields F_{p^k} in a polynomial basis.

Elements are tuples of ``k`` residues ``(c_0, ..., c_{k-1})`` standing for
``sum c_i X^i`` modulo a fixed monic irreducible ``modulus``.  The integer
*index* of an element is ``sum c_i p^i``; enumeration, the choice of
modulus and the choice of generator all follow index order, so every
context is reproducible.

Besides scalar arithmetic the module builds a few numpy tables that the
enumeration code leans on, most importantly :func:`trace_log_table`,
``e -> Tr(g^e)`` for the fixed generator ``g``.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import isqrt

import numpy as np

from .errors import InvalidPrime, InvalidSubfield, SizeExceeded, ZeroArgument

#: Largest field order accepted by :func:`build_field`.
MAX_FIELD_ORDER = 2**40


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def factorize(n):
    """Prime factorisation of a positive integer by trial division."""
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- polynomials over F_p, coefficient lists low -> high ---------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _trim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(poly, p):
    """Irreducibility test for a monic polynomial over F_p.

    ``poly`` has no root in any F_{p^j} with ``j <= deg/2``, checked via
    ``gcd(poly, x^{p^j} - x)``.
    """
    poly = _trim(poly)
    k = len(poly) - 1
    if k <= 1:
        return k == 1
    xp = [0, 1]
    for _ in range(k // 2):
        xp = _ppowmod(xp, p, poly, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(poly, diff, p)) > 1:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """An immutable description of F_{p^k}."""

    p: int
    k: int
    modulus: tuple
    generator: tuple

    @property
    def q(self):
        return self.p**self.k

    # -- element construction ------------------------------------------------
    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def elem(self, x):
        """Coerce an integer (embedded from F_p) or coefficient list."""
        if isinstance(x, int):
            return (x % self.p,) + (0,) * (self.k - 1)
        x = tuple(int(c) % self.p for c in x)
        if len(x) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(x)}")
        return x

    def to_index(self, x):
        return sum(c * self.p**i for i, c in enumerate(x))

    def from_index(self, n):
        out = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            out.append(r)
        return tuple(out)

    def elements(self, start=0, stop=None):
        """Elements in index order; ``start``/``stop`` allow range partitioning."""
        stop = self.q if stop is None else stop
        for n in range(start, stop):
            yield self.from_index(n)

    # -- arithmetic -----------------------------------------------------------
    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        p = self.p
        if self.k == 1:
            return (a[0] * b[0] % p,)
        r = _pmod(_pmul(list(a), list(b), p), list(self.modulus), p)
        return tuple(r) + (0,) * (self.k - len(r))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if self.k == 1:
            return (pow(a[0], e, self.p),)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a):
        if not any(a):
            raise ZeroArgument("zero has no inverse")
        return self.pow(a, self.q - 2)

    def frobenius(self, a, times=1):
        return self.pow(a, self.p**times)

    # -- structure ------------------------------------------------------------
    def trace(self, x, sub_degree=1):
        """Trace from F_{p^k} down to F_{p^sub_degree}."""
        if sub_degree < 1 or self.k % sub_degree:
            raise InvalidSubfield(f"{sub_degree} does not divide {self.k}")
        acc = self.zero
        y = x
        for _ in range(self.k // sub_degree):
            acc = self.add(acc, y)
            y = self.frobenius(y, sub_degree)
        return acc

    def trace_p(self, x):
        """Absolute trace as an integer in [0, p-1]."""
        return self.trace(x, 1)[0]

    @cached_property
    def order_factors(self):
        return tuple(sorted(factorize(self.q - 1)))

    def element_order(self, x):
        if not any(x):
            raise ZeroArgument("zero has no multiplicative order")
        n = self.q - 1
        for ell, e in factorize(n).items():
            for _ in range(e):
                if self.pow(x, n // ell) == self.one:
                    n //= ell
                else:
                    break
        return n

    def discrete_log(self, x):
        """Exponent ``e`` in [0, q-2] with ``generator**e == x``."""
        if not any(x):
            raise ZeroArgument("discrete log of zero")
        n = self.q - 1
        g = self.generator
        residues, moduli = [], []
        for ell, e in factorize(n).items():
            pe = ell**e
            cofactor = n // pe
            gi = self.pow(g, cofactor)
            xi = self.pow(x, cofactor)
            # digits of log in base ell, each found by baby-step/giant-step
            gamma = self.pow(gi, ell ** (e - 1))
            digits_log = 0
            for j in range(e):
                hj = self.pow(self.mul(self.pow(gi, -digits_log), xi), ell ** (e - 1 - j))
                dj = _bsgs(self, gamma, hj, ell)
                digits_log += dj * ell**j
            residues.append(digits_log)
            moduli.append(pe)
        return _crt(residues, moduli)

    def log_of_int(self, c):
        """Discrete log of the prime-field constant ``c``."""
        return self.discrete_log(self.elem(c))


def _bsgs(ctx, base, target, order):
    m = isqrt(order) + 1
    table = {}
    cur = ctx.one
    for j in range(m):
        table.setdefault(cur, j)
        cur = ctx.mul(cur, base)
    step = ctx.pow(base, -m)
    cur = target
    for i in range(m + 1):
        if cur in table:
            return (i * m + table[cur]) % order
        cur = ctx.mul(cur, step)
    raise ZeroArgument("element not in the subgroup")  # unreachable for valid input


def _crt(residues, moduli):
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        t = (r - x) * pow(m, -1, n) % n
        x += m * t
        m *= n
    return x % m


@lru_cache(maxsize=None)
def build_field(p, k=1):
    """Deterministic context for F_{p^k}.

    The modulus is the index-smallest monic irreducible of degree ``k``
    (``X`` itself when ``k == 1``), and the generator is the index-smallest
    element of full multiplicative order.
    """
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > MAX_FIELD_ORDER:
        raise SizeExceeded(f"p^k = {p}^{k} exceeds {MAX_FIELD_ORDER}")
    if k == 1:
        modulus = (0, 1)
    else:
        modulus = None
        for low in product(range(p), repeat=k):
            # low[-1] varies fastest, so reversing it walks index order
            cand = tuple(low[::-1]) + (1,)
            if cand[0] == 0:
                continue
            if is_irreducible(list(cand), p):
                modulus = cand
                break
    probe = FieldCtx(p, k, modulus, (1,) + (0,) * (k - 1))
    n = p**k - 1
    ells = list(factorize(n))
    for idx in range(1, p**k):
        x = probe.from_index(idx)
        if all(probe.pow(x, n // ell) != probe.one for ell in ells):
            return FieldCtx(p, k, modulus, x)
    raise AssertionError("no generator found")  # pragma: no cover


# -- vectorised tables --------------------------------------------------------

def _trace_vector(ctx):
    """tau_c = Tr(X^c) for c < k, so Tr(y) = tau . y."""
    out = []
    for c in range(ctx.k):
        x = [0] * ctx.k
        x[c] = 1
        out.append(ctx.trace_p(tuple(x)))
    return np.array(out, dtype=np.int64)


def _table_dtype(p):
    return np.int8 if p < 128 else np.int32


@lru_cache(maxsize=8)
def trace_log_table(ctx):
    """``T[e] = Tr_{F_q/F_p}(g^e)`` for ``0 <= e <= q-2`` as a small-int array.

    Powers ``g^j`` for ``j < B`` are produced directly; the table is then
    filled block-wise as ``Tr(g^{Bt} g^j) = P[j] . w_t`` with
    ``w_t[c] = Tr(g^{Bt} X^c)``, a small integer matrix product per block.
    """
    p, k = ctx.p, ctx.k
    n = ctx.q - 1
    if k == 1:
        out = np.empty(n, dtype=np.int64)
        g = ctx.generator[0]
        # cumulative powers in blocks to stay vectorised
        B = max(1, isqrt(n))
        base = np.empty(B, dtype=np.int64)
        cur = 1
        for j in range(B):
            base[j] = cur
            cur = cur * g % p
        step = cur
        scale = 1
        for start in range(0, n, B):
            stop = min(n, start + B)
            out[start:stop] = base[: stop - start] * scale % p
            scale = scale * step % p
        return out.astype(_table_dtype(p))
    tau = _trace_vector(ctx)
    B = isqrt(n) + 1
    P = np.empty((B, k), dtype=np.int64)
    cur = ctx.one
    for j in range(B):
        P[j] = cur
        cur = ctx.mul(cur, ctx.generator)
    step = cur  # g^B
    T = -(-n // B)
    W = np.empty((k, T), dtype=np.int64)
    h = ctx.one
    for t in range(T):
        y = h
        for c in range(k):
            W[c, t] = int(np.dot(tau, y)) % p
            y = ctx.mul(y, (0, 1) + (0,) * (k - 2)) if k > 1 else y
        h = ctx.mul(h, step)
    out = np.empty(T * B, dtype=_table_dtype(p))
    chunk = max(1, (1 << 22) // B)
    for t0 in range(0, T, chunk):
        t1 = min(T, t0 + chunk)
        block = (P @ W[:, t0:t1]) % p  # shape (B, t1-t0)
        out[t0 * B:t1 * B] = block.T.reshape(-1)
    return out[:n]


@lru_cache(maxsize=4)
def exp_index_table(ctx):
    """``E[e]`` = index of ``g^e``; small fields only (used by witness search)."""
    n = ctx.q - 1
    if n > 5 * 10**7:
        raise SizeExceeded("exp table too large")
    out = np.empty(n, dtype=np.int64)
    cur = ctx.one
    for e in range(n):
        out[e] = ctx.to_index(cur)
        cur = ctx.mul(cur, ctx.generator)
    return out


def index_add(ctx, a, b):
    """Vectorised addition of element index arrays."""
    p = ctx.p
    out = np.zeros_like(a)
    scale = 1
    for _ in range(ctx.k):
        da = (a // scale) % p
        db = (b // scale) % p
        out += ((da + db) % p) * scale
        scale *= p
    return out


def index_scale(ctx, a, c):
    """Multiply index array by the prime-field scalar ``c``."""
    p = ctx.p
    out = np.zeros_like(a)
    scale = 1
    for _ in range(ctx.k):
        out += (((a // scale) % p) * c % p) * scale
        scale *= p
    return out


# -- nondegeneracy -------------------------------------------------------------

def is_nondegenerate_1var(f, p):
    """One-variable criterion: a polynomial with positive exponents is
    nondegenerate exactly when ``p`` does not divide its degree."""
    exps = [e[0] for e, _ in f.terms]
    if f.n != 1 or not exps or min(exps) <= 0:
        from .errors import InvalidArgument

        raise InvalidArgument("expects a one-variable polynomial with positive exponents")
    return max(exps) % p != 0


def degeneracy_witness_search(f, e_max=1, budget=10**7):
    """Look for a critical point of some face restriction with nonzero coordinates.

    For every closed face of the Newton polytope that avoids the origin the
    system ``x_i d/dx_i f_face = 0`` is scanned over ``(F_{q^e}^*)^n`` for
    ``e <= e_max``.  Returns ``(face, e, point)`` for the first hit (point
    as generator exponents), or None.  None is evidence only: the scan is
    bounded and proves nothing for n = 2.
    """
    from .errors import Unsupported

    if f.n > 2:
        raise Unsupported("witness search handles n <= 2")
    for e in range(1, e_max + 1):
        ctx = build_field(f.p, f.a * e)
        N = ctx.q - 1
        if N**f.n > budget:
            raise SizeExceeded(f"witness scan over {N}^{f.n} points")
        E = exp_index_table(ctx)
        grids = np.meshgrid(*[np.arange(N, dtype=np.int64)] * f.n, indexing="ij")
        pts = [g.reshape(-1) for g in grids]
        for face in f.faces_without_origin():
            terms = [t for t in f.terms if t[0] in face]
            hit = np.ones(pts[0].shape, dtype=bool)
            for i in range(f.n):
                acc = np.zeros(pts[0].shape, dtype=np.int64)
                for exps, c in terms:
                    w = c * exps[i] % f.p
                    if w == 0:
                        continue
                    lg = sum(ei * pi for ei, pi in zip(exps, pts)) % N
                    acc = index_add(ctx, acc, index_scale(ctx, E[lg], w))
                hit &= acc == 0
            idx = np.flatnonzero(hit)
            if idx.size:
                j = int(idx[0])
                return sorted(face), e, tuple(int(pt[j]) for pt in pts)
    return None
