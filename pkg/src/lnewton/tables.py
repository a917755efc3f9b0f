"""Digit tables: valuations and unit parts of the terms of ``c_s``.

A coefficient ``c_s`` of ``L_0^*`` is a sum of products over distinct
q-orbits ``O_1..O_j`` (lengths summing to s) of ``-prod_i chi(a_i)^{k_i}
G_{k_i}(q^{e})``.  Writing every ``k_i`` in base p gives a block of digits,
one column per power of p.  By Gross-Koblitz the term has
``ord_p = (sum of all digits)/(p-1)`` and, modulo pi, unit part

    prod_blocks ( - prod_i a_i^{sigma(k_i)} prod_t 1/k_i[t]! ).

:func:`min_weight_ord` finds the smallest digit weight among all tables
of a given s by branch and bound over orbit representatives from the
congruence module, and decides ``ord c_s`` when the unit parts at that
weight do not cancel.

The second half of the module holds the permutation combinatorics used
to explain such cancellations: f-simple permutations, the parity count
over sets stable under ``G_f`` and the carry group of a column multiset.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod

import numpy as np

from .congruence import SolutionVec, level_orbit_reps, sp_qd
from .errors import (HypothesisFailed, InsufficientTruncation, InvalidArgument,
                     RegimeError, SizeExceeded, Unsupported)
from .gauss import digit_sum, frac_part
from .slopes import factorials

__all__ = [
    "digit_sigma", "frac_part", "Block", "DigitTable", "carry_check", "block_to_solution",
    "table_valuation", "unit_part", "cor53_bound", "min_weight_ord", "MinWeightResult",
    "is_f_simple", "f_simple_fast", "parity_cancellation_check", "carry_group",
]


def digit_sigma(k, p):
    """Sum of the base-p digits of ``k >= 0``."""
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    return digit_sum(k, p)


def digits(k, p, length):
    out = []
    for _ in range(length):
        k, r = divmod(k, p)
        out.append(r)
    if k:
        raise InvalidArgument("number has more digits than the block width")
    return out


@dataclass(frozen=True)
class Block:
    """Digit block of one orbit: ``rows[i][t]`` is digit t of ``k_i``."""
    rows: tuple
    p: int

    @classmethod
    def from_k(cls, k, p, width):
        return cls(tuple(tuple(digits(int(x), p, width)) for x in k), p)

    @classmethod
    def from_columns(cls, cols, p):
        return cls(tuple(zip(*cols)), p)

    @property
    def width(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def columns(self):
        return list(zip(*self.rows))

    @property
    def k(self):
        return tuple(sum(d * self.p**t for t, d in enumerate(row)) for row in self.rows)

    @property
    def weight(self):
        return sum(map(sum, self.rows))

    def carries(self, exps):
        """Per column ``(u, v)`` with ``sum d_i k_i[t] = u p - v``, ``0 <= v < p``."""
        out = []
        for col in self.columns:
            S = sum(d * x for d, x in zip(exps, col))
            u = -(-S // self.p)
            out.append((u, u * self.p - S))
        return out


@dataclass(frozen=True)
class DigitTable:
    blocks: tuple
    p: int
    a: int = 1

    @property
    def weight(self):
        return sum(b.weight for b in self.blocks)

    @property
    def s(self):
        return sum(b.width for b in self.blocks) // self.a

    def __len__(self):
        return len(self.blocks)


def _exps_1var(f):
    if f.n != 1:
        raise Unsupported("carries are defined for one variable")
    return [e[0] for e in f.exponent_columns()]


def carry_check(block, f):
    """Cyclic carry equalities ``u[t-1] = v[t]`` (valid criterion when p >= sum d_i)."""
    exps = _exps_1var(f)
    if f.p < sum(exps):
        raise RegimeError("carry criterion needs p >= sum of exponents")
    if f.a != 1:
        raise RegimeError("carry criterion is stated for q = p")
    uv = block.carries(exps)
    return all(uv[t - 1][0] == uv[t][1] for t in range(len(uv)))


def block_to_solution(block, f):
    """The SolutionVec ``k/(p^s - 1)`` of a block passing :func:`carry_check`, else None."""
    if not carry_check(block, f):
        return None
    return SolutionVec.from_k(block.k, f.p, block.width)


def table_valuation(table, kind="p"):
    """``weight/(p-1)``, or the ``ord_q`` value when ``kind == "q"``."""
    v = Fraction(table.weight, table.p - 1)
    return v / table.a if kind == "q" else v


def unit_part(table, f):
    """Residue mod p of the unit attached to a table (sign ``(-1)^{#blocks}``)."""
    p = f.p
    _, inv = factorials(p)
    coeffs = f.coefficients()
    out = 1
    for b in table.blocks:
        term = p - 1
        for c, row in zip(coeffs, b.rows):
            term = term * pow(c, sum(row), p) % p
            for x in row:
                term = term * inv[x] % p
        out = out * term % p
    return out


def cor53_bound(table, f):
    """``(1/d) sum u[t]`` over all columns of the table."""
    exps = _exps_1var(f)
    d = max(exps)
    return Fraction(sum(u for b in table.blocks for u, _ in b.carries(exps)), d)


# -- minimal-weight search ----------------------------------------------------------

def _digit_sums(K, p, width):
    K = K.copy()
    out = np.zeros(K.shape[0], dtype=np.int64)
    for _ in range(width):
        out += (K % p).sum(axis=1)
        K //= p
    return out


@dataclass
class _Level:
    e: int
    reps: np.ndarray  # sorted by weight
    weights: np.ndarray


@lru_cache(maxsize=32)
def _level(V, p, a, e, budget):
    q = p**a
    K = level_orbit_reps(list(V), q, e, budget)
    w = _digit_sums(K, p, a * e)
    order = np.argsort(w, kind="stable")
    return _Level(e, K[order], w[order])


def _partitions(s, largest=None):
    largest = s if largest is None else largest
    if s == 0:
        yield []
        return
    for first in range(min(s, largest), 0, -1):
        for rest in _partitions(s - first, first):
            yield [first] + rest


@dataclass
class MinWeightResult:
    s: int
    status: str  # proved | conditional | inconclusive
    ord_p: object  # Fraction or None
    ord_q: object
    weight: object
    min_weight: int
    unit_sum: int
    tables: list = field(default_factory=list, repr=False)
    cancelled: list = field(default_factory=list)  # weights whose unit sums vanished
    lower_bound: object = None


def _tables_at_weight(levels, parts, W, limit):
    """All choices of distinct orbits with the level multiset ``parts`` and weight W."""
    need = Counter(parts)
    order = sorted(need)
    mins = []
    for e in order:
        w = levels[e].weights
        j = need[e]
        if len(w) < j:
            return []
        mins.append(int(w[:j].sum()))
    tail = [sum(mins[i:]) for i in range(len(mins) + 1)]
    out = []

    def pick(li, start, left, budget, chosen):
        if li == len(order):
            if budget == 0:
                out.append(list(chosen))
                if len(out) > limit:
                    raise SizeExceeded(f"more than {limit} tables at weight {W}")
            return
        e = order[li]
        lv = levels[e]
        if left == 0:
            pick(li + 1, 0, need[order[li + 1]] if li + 1 < len(order) else 0, budget, chosen)
            return
        w = lv.weights
        rest = tail[li + 1]
        for idx in range(start, len(w) - left + 1):
            wi = int(w[idx])
            low = int(w[idx:idx + left].sum())
            if low + rest > budget:
                break
            chosen.append((e, idx))
            pick(li, idx + 1, left - 1, budget - wi, chosen)
            chosen.pop()

    pick(0, 0, need[order[0]], W, [])
    return out


def min_weight_ord(f, s, weight_cap=None, budget=5 * 10**7, limit=10**5):
    """Smallest digit weight among the tables of ``c_s`` and its unit-sum verdict.

    Walks weights upward from the minimum.  The first weight whose unit
    sum is nonzero mod p gives ``ord_p c_s = W/(p-1)``; it is ``proved``
    when no lower weight cancelled and ``conditional`` otherwise (then it
    relies on cancelled classes gaining a full unit of valuation).
    ``weight_cap`` defaults to ``W* + p - 2``.
    """
    if s < 1:
        raise InvalidArgument("s must be positive")
    p, a = f.p, f.a
    V = tuple(tuple(c) for c in f.exponent_columns())
    if f.m == 0:
        raise InvalidArgument("need at least one non-constant term")
    levels = {e: _level(V, p, a, e, budget) for e in range(1, s + 1)}
    parts_all = list(_partitions(s))
    best = None
    for parts in parts_all:
        need = Counter(parts)
        if any(len(levels[e].weights) < j for e, j in need.items()):
            continue
        w = sum(int(levels[e].weights[:j].sum()) for e, j in need.items())
        best = w if best is None else min(best, w)
    if best is None:
        raise InsufficientTruncation(f"no tables for s = {s}")
    cap = best + p - 2 if weight_cap is None else weight_cap
    cancelled = []
    for W in range(best, cap + 1):
        found = []
        for parts in parts_all:
            for choice in _tables_at_weight(levels, parts, W, limit):
                blocks = tuple(Block.from_k(levels[e].reps[i].tolist(), p, a * e) for e, i in choice)
                found.append(DigitTable(blocks, p, a))
        if not found:
            continue
        total = sum(unit_part(t, f) for t in found) % p
        if total:
            status = "conditional" if cancelled else "proved"
            ordp = Fraction(W, p - 1)
            return MinWeightResult(s, status, ordp, ordp / a, W, best, total, found, cancelled)
        cancelled.append(W)
    low = Fraction(cap + 1, p - 1)
    return MinWeightResult(s, "inconclusive", None, None, None, best, 0, [], cancelled,
                           lower_bound=low)


# -- f-simple permutations ------------------------------------------------------------

def compose(a, b):
    """``(a o b)(i) = a[b[i]]`` on one-line tuples."""
    return tuple(a[x] for x in b)


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def sign(a):
    seen, flips = set(), 0
    for i in range(len(a)):
        if i in seen:
            continue
        L, j = 0, i
        while j not in seen:
            seen.add(j)
            j = a[j]
            L += 1
        flips += L - 1
    return -1 if flips % 2 else 1


def cycles(a):
    seen, out = set(), []
    for i in range(len(a)):
        if i in seen:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j)
            j = a[j]
        out.append(tuple(c))
    return out


def fiber_group(fmap):
    """``G_f``: permutations preserving the labels ``fmap[i]``."""
    fibers = {}
    for i, lab in enumerate(fmap):
        fibers.setdefault(lab, []).append(i)
    groups = list(fibers.values())
    n = len(fmap)
    for choice in product(*(permutations(g) for g in groups)):
        img = list(range(n))
        for g, h in zip(groups, choice):
            for x, y in zip(g, h):
                img[x] = y
        yield tuple(img)


def fiber_group_order(fmap):
    return prod(factorial(c) for c in Counter(fmap).values())


def is_f_simple(a, fmap, method="brute", budget=10**6):
    """Whether only the identity of ``G_f`` commutes with ``a``."""
    if len(a) != len(fmap) or sorted(a) != list(range(len(a))):
        raise InvalidArgument("not a permutation of the labelled set")
    if method == "fast":
        return f_simple_fast(a, fmap)
    if fiber_group_order(fmap) > budget:
        raise SizeExceeded("G_f too large for the brute-force centralizer")
    ident = tuple(range(len(a)))
    return not any(s != ident and compose(s, a) == compose(a, s) for s in fiber_group(fmap))


def _label_word(c, fmap):
    return tuple(fmap[i] for i in c)


def _rotations(w):
    return {w[i:] + w[:i] for i in range(len(w))}


def f_simple_fast(a, fmap):
    """Cycle-structure criterion: no cycle has a periodic label word and no
    two cycles carry rotations of the same label word."""
    words = [_label_word(c, fmap) for c in cycles(a)]
    canon = []
    for w in words:
        L = len(w)
        for d in range(1, L):
            if L % d == 0 and w == w[d:] + w[:d]:
                return False
        canon.append(min(_rotations(w)))
    return len(set(canon)) == len(canon)


@dataclass
class ParityReport:
    even_non_simple: int
    odd_non_simple: int
    equal: bool
    prop46_applicable: bool = False
    even_classes: int = 0
    odd_classes: int = 0
    prop46_equal: object = None


def parity_cancellation_check(G, fmap, method="fast"):
    """Even/odd counts of non-f-simple elements of a set stable under ``G_f``.

    Raises HypothesisFailed when ``sigma G != G`` for some ``sigma`` in
    ``G_f``.  The class-count statement is evaluated when its extra
    hypotheses (conjugation stability of the f-simple part, balanced
    parity of G) hold.
    """
    G = {tuple(g) for g in G}
    Gf = list(fiber_group(fmap))
    for sgm in Gf:
        for g in G:
            if compose(sgm, g) not in G:
                raise HypothesisFailed("G is not stable under left multiplication by G_f")
    even = odd = 0
    simple = []
    for g in G:
        if is_f_simple(g, fmap, method):
            simple.append(g)
        elif sign(g) == 1:
            even += 1
        else:
            odd += 1
    rep = ParityReport(even, odd, even == odd)
    parity = Counter(sign(g) for g in G)
    conj_ok = all(compose(compose(sgm, g), inverse(sgm)) in G for g in simple for sgm in Gf)
    if conj_ok and parity[1] == parity[-1]:
        rep.prop46_applicable = True
        seen, ev, od = set(), 0, 0
        for g in simple:
            if g in seen:
                continue
            cls = {compose(compose(sgm, g), inverse(sgm)) for sgm in Gf}
            seen |= cls
            if sign(g) == 1:
                ev += 1
            else:
                od += 1
        rep.even_classes, rep.odd_classes = ev, od
        rep.prop46_equal = ev == od
    return rep


def carry_group(columns):
    """Permutations ``a`` of the columns with ``u(w) = v(a(w))`` for every w.

    ``columns`` is a list of ``(u, v, vector)`` triples.  Returns ``(G, fmap)``
    where ``fmap`` labels each column by its value vector.
    """
    s = len(columns)
    if s > 8:
        raise SizeExceeded("at most 8 columns")
    G = [a for a in permutations(range(s))
         if all(columns[w][0] == columns[a[w]][1] for w in range(s))]
    fmap = tuple(tuple(c[2]) for c in columns)
    return G, fmap


def u_value_group(columns):
    """Permutations preserving the u-value of every column."""
    s = len(columns)
    return [a for a in permutations(range(s)) if all(columns[w][0] == columns[a[w]][0] for w in range(s))]
