"""Solutions of the exponent congruence ``V k = 0 mod (q^d - 1)``.

``V`` is the n x m integer matrix whose columns are the exponent vectors
of the non-constant terms.  The kernel of ``V`` over ``Z/N`` is found by
diagonalising ``V`` with unimodular row and column operations
(``L V R = D``) and enumerating only the kernel of ``D``, so the cost is
the size of the answer rather than ``N^m``.

Solutions are handled in two forms: numpy arrays of integer vectors
``k`` at a fixed level (fast, used by the table search) and
:class:`SolutionVec` objects with exact fractions ``r = k / (q^d - 1)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import NotClosed, SizeExceeded
from .ffield import factorize

DEFAULT_BUDGET = 5 * 10**7


def diagonalize(A):
    """Unimodular ``L``, ``R`` and diagonal ``D`` with ``L A R = D``.

    Plain Euclidean elimination on rows and columns; the diagonal is not
    forced into divisibility order since only the kernel is needed.
    """
    n, m = len(A), len(A[0])
    A = [list(map(int, row)) for row in A]
    L = [[int(i == j) for j in range(n)] for i in range(n)]
    R = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for M in (A, R):
            for row in M:
                row[i], row[j] = row[j], row[i]

    for t in range(min(n, m)):
        while True:
            cands = [(abs(A[i][j]), i, j) for i in range(t, n) for j in range(t, m) if A[i][j]]
            if not cands:
                return A, L, R
            _, i, j = min(cands)
            swap_rows(t, i)
            swap_cols(t, j)
            piv = A[t][t]
            clean = True
            for i in range(t + 1, n):
                c = A[i][t] // piv
                if c:
                    A[i] = [x - c * y for x, y in zip(A[i], A[t])]
                    L[i] = [x - c * y for x, y in zip(L[i], L[t])]
                clean &= A[i][t] == 0
            for j in range(t + 1, m):
                c = A[t][j] // piv
                if c:
                    for M, src in ((A, t), (R, t)):
                        for row in M:
                            row[j] -= c * row[src]
                clean &= A[t][j] == 0
            if clean:
                break
    return A, L, R


def _as_matrix(V):
    """Accept columns as a list of exponent tuples (or ints for n = 1)."""
    cols = [(v,) if isinstance(v, int) else tuple(v) for v in V]
    n = len(cols[0])
    return [[c[i] for c in cols] for i in range(n)]


@lru_cache(maxsize=64)
def _kernel_generators(Vkey, N):
    A = _as_matrix(Vkey)
    D, _, R = diagonalize(A)
    n, m = len(A), len(A[0])
    steps = []
    for i in range(m):
        s = D[i][i] if i < n else 0
        g = gcd(s, N)  # gcd(0, N) = N: free coordinate
        steps.append((g, N // g))
    return steps, R


def kernel_size(V, N):
    steps, _ = _kernel_generators(tuple(map(_key, V)), N)
    out = 1
    for g, _ in steps:
        out *= g
    return out


def _key(v):
    return v if isinstance(v, int) else tuple(v)


def kernel_array(V, N, budget=DEFAULT_BUDGET):
    """All ``k`` in ``(Z/N)^m`` with ``V k = 0 mod N``, rows sorted lexicographically."""
    Vkey = tuple(map(_key, V))
    steps, R = _kernel_generators(Vkey, N)
    count = 1
    for g, _ in steps:
        count *= g
    if count > budget:
        raise SizeExceeded(f"kernel has {count} elements, budget {budget}")
    m = len(steps)
    axes = [np.arange(g, dtype=np.int64) * step for g, step in steps]
    grids = np.meshgrid(*axes, indexing="ij")
    Y = np.stack([g.reshape(-1) for g in grids], axis=1) if m else np.zeros((1, 0), np.int64)
    Rm = np.array(R, dtype=object)
    Rm = np.array([[int(x) % N for x in row] for row in Rm], dtype=np.int64)
    if Rm.size and int(Rm.max()) * N * m >= 2**62:
        K = (Y.astype(object) @ Rm.T.astype(object)) % N
        K = K.astype(np.int64)
    else:
        K = (Y @ Rm.T) % N
    order = np.lexsort(K.T[::-1])
    K = K[order]
    # post-hoc verification of the congruence
    A = np.array(_as_matrix(Vkey), dtype=object)
    if K.shape[0] and np.any((K.astype(object) @ A.T) % N != 0):
        raise AssertionError("kernel enumeration produced a non-solution")  # pragma: no cover
    return K


def exact_period_mask(K, q, d):
    """Rows of the level-``d`` array lying in no ``H(q, d/l)`` for primes ``l | d``."""
    N = q**d - 1
    mask = np.ones(K.shape[0], dtype=bool)
    for ell in factorize(d) if d > 1 else {}:
        sub = q ** (d // ell) - 1
        M = N // sub
        mask &= ~np.all(K % M == 0, axis=1)
    return mask


def lexmin_rotation(K, q, d):
    """Lexicographically smallest element of each row's q-orbit."""
    N = q**d - 1
    best = K.copy()
    cur = K.copy()
    for _ in range(1, d):
        cur = (cur * q) % N
        less = np.zeros(K.shape[0], dtype=bool)
        decided = np.zeros(K.shape[0], dtype=bool)
        for j in range(K.shape[1]):
            lt = (cur[:, j] < best[:, j]) & ~decided
            gt = (cur[:, j] > best[:, j]) & ~decided
            less |= lt
            decided |= lt | gt
        best[less] = cur[less]
    return best


def level_orbit_reps(V, q, d, budget=DEFAULT_BUDGET):
    """Canonical representatives (as k-vectors at level d) of the q-orbits of S_p(q, d)."""
    K = kernel_array(V, q**d - 1, budget)
    K = K[exact_period_mask(K, q, d)]
    canon = lexmin_rotation(K, q, d)
    keep = np.all(canon == K, axis=1)
    return K[keep]


# -- exact objects ------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class SolutionVec:
    r: tuple  # Fractions in [0, 1)
    d: int

    @classmethod
    def from_k(cls, k, q, d):
        N = q**d - 1
        return cls(tuple(Fraction(int(x), N) for x in k), d)

    def k(self, q, d=None):
        d = self.d if d is None else d
        N = q**d - 1
        out = []
        for x in self.r:
            y = x * N
            if y.denominator != 1:
                raise ValueError(f"{self.r} is not at level {d}")
            out.append(int(y))
        return tuple(out)

    def act(self, q):
        """The image under ``r -> q r mod 1``."""
        return SolutionVec(tuple((q * x) % 1 for x in self.r), self.d)

    def satisfies(self, V):
        A = _as_matrix(V)
        return all(sum(a * x for a, x in zip(row, self.r)).denominator == 1 for row in A)


def enumerate_H(V, q, d, budget=DEFAULT_BUDGET):
    """``H_p(q, d)`` as a sorted list of SolutionVec (level ``d``)."""
    K = kernel_array(V, q**d - 1, budget)
    return [SolutionVec.from_k(row, q, d) for row in K.tolist()]


def sp_qd(V, q, d, budget=DEFAULT_BUDGET):
    """Exact-period stratum ``S_p(q, d)``."""
    K = kernel_array(V, q**d - 1, budget)
    K = K[exact_period_mask(K, q, d)]
    return [SolutionVec.from_k(row, q, d) for row in K.tolist()]


def orbit_length(r, q):
    """Minimal ``d`` with ``(q^d - 1) r`` integral."""
    den = 1
    for x in r.r if isinstance(r, SolutionVec) else r:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    if den == 1:
        return 1
    if gcd(den, q) != 1:
        raise ValueError("denominator shares a factor with q")
    d, t = 1, q % den
    while t != 1:
        t = t * q % den
        d += 1
    return d


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple  # ((representative SolutionVec, length), ...)

    def __len__(self):
        return len(self.orbits)

    @property
    def lengths(self):
        return sorted({d for _, d in self.orbits})


def orbit_decompose(solutions, q):
    remaining = {s.r: s for s in solutions}
    pool = set(remaining)
    orbits = []
    for r in sorted(remaining):
        if r not in pool:
            continue
        members = [r]
        cur = remaining[r].act(q)
        while cur.r != r:
            if cur.r not in remaining:
                raise NotClosed(f"{cur.r} missing from the input")
            members.append(cur.r)
            cur = cur.act(q)
        for x in members:
            pool.discard(x)
        rep = min(members)
        orbits.append((SolutionVec(rep, remaining[r].d), len(members)))
    return OrbitDecomposition(tuple(orbits))


def _mobius(n):
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def inclusion_exclusion(q, d):
    """``sum_{e | d} mu(d/e) (q^e - 1)``."""
    return sum(_mobius(d // e) * (q**e - 1) for e in range(1, d + 1) if d % e == 0)


def count_check(V, q, d, budget=DEFAULT_BUDGET):
    """Compare ``|S_p(q, d)|`` with the inclusion-exclusion count.

    The closed formula assumes every level-e group is cyclic of order
    ``q^e - 1``; ``hypothesis`` records whether that holds here, and a
    mismatch is only meaningful when it does.
    """
    enumerated = len(sp_qd(V, q, d, budget))
    formula = inclusion_exclusion(q, d)
    divisors = [e for e in range(1, d + 1) if d % e == 0]
    hypothesis = all(kernel_size(V, q**e - 1) == q**e - 1 for e in divisors)
    return {
        "q": q, "d": d, "enumerated": enumerated, "formula": formula,
        "match": enumerated == formula, "hypothesis": hypothesis,
    }


def period_level(r, q):
    """The level lambda from the Euler-theorem argument; r lies in H(q, lambda)."""
    return orbit_length(r, q)
