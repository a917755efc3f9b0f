"""Brute-force exponential sums and the L-functions built from them.

Sums are evaluated by counting: for every extension degree we build the
histogram ``c -> #{x : Tr f(x) = c}`` with integer numpy loops over
generator exponents, then turn it into a :class:`CycNum` once.  A point
``x = (g^{E_1}, ..., g^{E_n})`` sends the monomial ``a x^V`` to
``g^{log a + V.E}``, so the trace of every term is one table lookup.

The series returned by :func:`lfunction_star` and :func:`l0_star` are
sign-adjusted, i.e. they are ``L*^{(-1)^{n-1}}``, which is a polynomial of
degree ``n! V(f)`` for nondegenerate ``f``.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .cyclotomic import (CycNum, CycSeries, divide_linear, power_sums_to_series,
                         series_inverse, series_mul)
from .errors import DegreeAnomaly, InternalError, SizeExceeded, Unsupported
from .ffield import build_field, trace_log_table
from .poly import LaurentPoly
from .polygon import newton_polygon

DEFAULT_BUDGET = 6 * 10**8
CHUNK = 1 << 22


def _threads(threads):
    if threads is None:
        threads = int(os.environ.get("LNEWTON_THREADS", 0)) or os.cpu_count() or 1
    return max(1, threads)


def _histogram(F, terms, n, threads=None):
    """Counts of ``Tr f`` over ``(F^*)^n`` for ``terms = [(exps, coeff)]``."""
    p = F.p
    N = F.q - 1
    table = trace_log_table(F)
    logs = [(tuple(e % N for e in exps), F.log_of_int(c)) for exps, c in terms]
    total = N**n

    def work(start, stop):
        idx = np.arange(start, stop, dtype=np.int64)
        coords = []
        rest = idx
        for _ in range(n):
            coords.append(rest % N)
            rest = rest // N
        acc = np.zeros(stop - start, dtype=np.int32)
        for exps, lg in logs:
            pos = np.full(stop - start, lg, dtype=np.int64)
            for e, E in zip(exps, coords):
                if e:
                    pos += e * E
            pos %= N
            acc += table[pos]
        acc %= p
        return np.bincount(acc, minlength=p).astype(np.int64)

    bounds = [(s, min(total, s + CHUNK)) for s in range(0, total, CHUNK)]
    t = _threads(threads)
    if t == 1 or len(bounds) == 1:
        parts = [work(s, e) for s, e in bounds]
    else:
        with ThreadPoolExecutor(t) as pool:
            parts = list(pool.map(lambda b: work(*b), bounds))
    return sum(parts)


def _star_naive(f, k, threads=None):
    F = build_field(f.p, f.a * k)
    counts = _histogram(F, list(f.terms), f.n, threads)
    return CycNum.from_counts(f.p, counts)


# -- quadratic fiber reduction --------------------------------------------------------

def quadratic_split(f):
    """Write a two-variable ``f`` as ``b v^2 + h(w) v + g(w)``.

    Returns ``(v_index, b, h, g)`` with ``h`` and ``g`` one-variable Laurent
    polynomials, or None when no variable qualifies (needs odd p, degree
    exactly 2 in v, no negative powers of v, and a lone constant ``b v^2``).
    """
    if f.n != 2 or f.p == 2:
        return None
    for v in (1, 0):
        w = 1 - v
        vdeg = [e[v] for e, _ in f.terms]
        if min(vdeg) < 0 or max(vdeg) != 2:
            continue
        top = [(e, c) for e, c in f.terms if e[v] == 2]
        if len(top) != 1 or top[0][0][w] != 0:
            continue
        b = top[0][1]
        h = [((e[w],), c) for e, c in f.terms if e[v] == 1]
        g = [((e[w],), c) for e, c in f.terms if e[v] == 0]
        return v, b, LaurentPoly.from_terms(f.p, h, 1, f.a), LaurentPoly.from_terms(f.p, g, 1, f.a)
    return None


def _poly_mul_1var(u, w, p, a):
    acc = {}
    for (e1,), c1 in u.terms:
        for (e2,), c2 in w.terms:
            acc[e1 + e2] = (acc.get(e1 + e2, 0) + c1 * c2) % p
    return LaurentPoly.univariate(p, acc, a)


@lru_cache(maxsize=None)
def _quadratic_gauss(p, a, k, b):
    """``sum_{y in F_{q^k}} zeta^{Tr(b y^2)}``."""
    sq = LaurentPoly.from_terms(p, [((2,), b)], 1, a)
    return _star_naive(sq, k) + 1


def _star_fiber(f, k, split, threads=None):
    _, b, h, g = split
    p, a = f.p, f.a
    inv4b = pow(4 * b, -1, p)
    h2 = _poly_mul_1var(h, h, p, a)
    shifted = LaurentPoly.from_terms(
        p, list(g.terms) + [(e, -c * inv4b) for e, c in h2.terms], 1, a)
    G2 = _quadratic_gauss(p, a, k, b)
    A = _star_naive(shifted, k, threads)
    B = _star_naive(g, k, threads)
    return G2 * A - B


# -- public sums ---------------------------------------------------------------------

def star_cost(f, k, reduce=True):
    """Points the enumeration of ``S_k^*`` touches."""
    N = f.q**k - 1
    if reduce and quadratic_split(f) is not None:
        return 3 * N
    return N**f.n


@lru_cache(maxsize=4096)
def _exp_sum_star_cached(f, k, reduce):
    if reduce:
        split = quadratic_split(f)
        if split is not None:
            return _star_fiber(f, k, split)
    return _star_naive(f, k)


def exp_sum_star(f, k, budget=DEFAULT_BUDGET, reduce=True, threads=None):
    """``S_k^*(f)`` over ``(F_{q^k}^*)^n`` as an integral CycNum."""
    if f.n > 2:
        raise Unsupported("n <= 2 only")
    cost = star_cost(f, k, reduce)
    if cost > budget:
        raise SizeExceeded(f"S_{k}^* needs {cost} points, budget {budget}")
    if threads not in (None, 1) and _threads(threads) > 1:
        split = quadratic_split(f) if reduce else None
        if split is not None:
            return _star_fiber(f, k, split, threads)
        return _star_naive(f, k, threads)
    return _exp_sum_star_cached(f, k, reduce)


def exp_sum_full(f, k, budget=DEFAULT_BUDGET, reduce=True, threads=None):
    """``S_k(f)`` over the affine space, as a sum of torus sums over coordinate strata."""
    if any(e < 0 for exps, _ in f.terms for e in exps):
        raise Unsupported("full sums need nonnegative exponents")
    p = f.p
    total = CycNum.integer(p, 0)
    for r in range(f.n + 1):
        for zero_vars in combinations(range(f.n), r):
            keep = [i for i in range(f.n) if i not in zero_vars]
            terms = [(tuple(e[i] for i in keep), c) for e, c in f.terms
                     if all(e[j] == 0 for j in zero_vars)]
            if not keep:
                c0 = sum(c for _, c in terms) % p
                total = total + CycNum.zeta(p, f.a * k * c0)
                continue
            g = LaurentPoly.from_terms(p, terms, len(keep), f.a)
            total = total + exp_sum_star(g, k, budget, reduce, threads)
    return total


# -- L-functions ---------------------------------------------------------------------

def _sign(f):
    return 1 if f.n % 2 == 1 else -1


def default_D(f, budget=DEFAULT_BUDGET, reduce=True):
    """``n!V + 2`` when affordable, else ``n!V``; SizeExceeded if neither."""
    deg = f.normalized_volume()
    for D in (deg + 2, deg):
        if star_cost(f, D, reduce) <= budget:
            return D
    raise SizeExceeded(f"cannot reach degree {deg} within budget {budget}")


def star_sums(f, D, budget=DEFAULT_BUDGET, reduce=True, threads=None):
    return [exp_sum_star(f, k, budget, reduce, threads) for k in range(1, D + 1)]


def _check_series(series, deg, check):
    if not series.is_integral():
        raise InternalError("non-integral L-function coefficient")
    if check:
        bad = [i for i in range(deg + 1, series.D + 1) if not series[i].is_zero()]
        if bad:
            raise DegreeAnomaly(f"nonzero coefficients beyond degree {deg} at {bad}")


def lfunction_star(f, D=None, budget=DEFAULT_BUDGET, check=True, reduce=True, threads=None):
    """Sign-adjusted ``L*(f,T)^{(-1)^{n-1}}`` truncated at ``T^D``.

    With ``check`` the coefficients of degree ``n!V(f) < i <= D`` must vanish,
    otherwise DegreeAnomaly (the input is then likely degenerate).
    """
    if D is None:
        D = default_D(f, budget, reduce)
    sums = star_sums(f, D, budget, reduce, threads)
    series = power_sums_to_series(f.p, sums, _sign(f))
    _check_series(series, f.normalized_volume(), check)
    return series


def l0_star(f, D=None, budget=DEFAULT_BUDGET, check=True, reduce=True, threads=None):
    """Sign-adjusted product with ``S_k^*`` rescaled by ``(1 - q^k)^{m-n}``."""
    if D is None:
        D = default_D(f, budget, reduce)
    m = f.m
    if m < f.n:
        raise Unsupported("needs at least n non-constant terms")
    sums = [S.scale((1 - f.q**k) ** (m - f.n))
            for k, S in enumerate(star_sums(f, D, budget, reduce, threads), start=1)]
    return power_sums_to_series(f.p, sums, _sign(f))


def l0_star_from_lstar(f, lstar):
    """The same series assembled as ``prod_i L*(q^i T)^{(-1)^i C(m-n, i)}``."""
    M = f.m - f.n
    out = CycSeries.one(f.p, lstar.D)
    for i in range(M + 1):
        factor = lstar.scale_T(f.q**i)
        if i % 2:
            factor = series_inverse(factor)
        for _ in range(comb(M, i)):
            out = series_mul(out, factor)
    return out


def lfunction_full(f, D=None, budget=DEFAULT_BUDGET, reduce=True, threads=None):
    """``exp(sum S_k T^k / k)`` from the affine sums (no sign adjustment)."""
    if D is None:
        D = default_D(f, budget, reduce)
    sums = [exp_sum_full(f, k, budget, reduce, threads) for k in range(1, D + 1)]
    return power_sums_to_series(f.p, sums)


def strip_trivial_factor(lstar, root=1):
    """Divide by ``1 - root*T``; for a polynomial with zero constant term the
    root is 1, otherwise ``zeta^{Tr f(0)}``."""
    return divide_linear(lstar, root)


def l_function(f, D=None, budget=DEFAULT_BUDGET, check=True, threads=None):
    """``L(f,T)`` for a one-variable polynomial, via ``L* = (1 - zeta^{Tr f(0)} T) L``."""
    if not f.is_polynomial_1var:
        raise Unsupported("L(f,T) via the trivial factor needs a one-variable polynomial")
    if D is None:
        D = default_D(f, budget)
    lstar = lfunction_star(f, D, budget, check, threads=threads)
    root = CycNum.zeta(f.p, f.a * f.constant)
    return strip_trivial_factor(lstar, root)


def series_polygon(series, a=1, upto=None):
    """Newton polygon with ord_q valuations (``ord_p / a``)."""
    vals = series.ord_p()
    if upto is not None:
        vals = vals[: upto + 1]
    vals = [v if not isinstance(v, Fraction) else v / a for v in vals]
    return newton_polygon(vals)


def lstar_polygon(f, D=None, **kw):
    series = lfunction_star(f, D, **kw)
    return series_polygon(series, f.a, f.normalized_volume())


def l_polygon(f, D=None, **kw):
    series = l_function(f, D, **kw)
    return series_polygon(series, f.a, f.degree - 1)
