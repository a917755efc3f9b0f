"""The eleven acceptance criteria, exact (tolerance zero).

Each criterion is one test; ``conftest.py`` prints a PASS/FAIL line per
criterion at the end of the run.  The file can also be executed directly.
"""

import time
from fractions import Fraction

import pytest

from lnewton import gauss, oracle, reproduce, sextic, slopes, tables
from lnewton.poly import LaurentPoly, parse_poly

U = LaurentPoly.univariate
HALF = Fraction(1, 2)


def _timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


def _close(lhs, rhs, cutoff):
    d = lhs - rhs
    return d.is_zero() or d.valuation() >= cutoff


def test_criterion_01_cubic():
    for p in (5, 11, 17):
        for a1 in (1, 2):
            t = time.perf_counter()
            f = U(p, {3: 1, 1: a1})
            lam = Fraction(p + 1, 3 * (p - 1))
            assert oracle.l_polygon(f).slopes == [lam, 1 - lam]
            rep = slopes.lambda_s(f, 2)
            assert rep.status == "proved" and rep.lambda_s == lam
            assert time.perf_counter() - t < 10


def test_criterion_02_quartic_branches():
    for p in (7, 11, 19):
        for co, lam in (({4: 1, 2: 1, 1: 1}, Fraction(p + 1, 4 * (p - 1))),
                        ({4: 1, 1: 1}, Fraction(p + 5, 4 * (p - 1)))):
            t = time.perf_counter()
            f = U(p, co)
            want = [lam, HALF, 1 - lam]
            assert oracle.l_polygon(f).slopes == want
            poly = slopes.full_np_small_d(f, oracle_fallback=False)
            assert poly.source == "slopes" and poly.slopes == want
            assert time.perf_counter() - t < 30


SEXTIC_CASES = ("i", "v", "vi", "vii", "x", "xi")


def sextic_instances():
    out = []
    for case in SEXTIC_CASES:
        for p in (11, 17, 23):
            co = reproduce.SEXTIC_INSTANCES[case].get(p)
            if co is None:
                # case (v) needs a4 != 0 and a2 = a4^2/3 != 0, so p >= 6 + 4 + 2
                assert (case, p) == ("v", 11)
                inv3 = pow(3, -1, p)
                assert not any(sextic.hypothesis((a4, 0, a4 * a4 * inv3 % p, 0), p)
                               for a4 in range(1, p))
                continue
            out.append((case, p, co))
    out.append(("ii", 17, (3, 3, 6, 2)))
    return out


def test_criterion_03_sextic_family():
    for case, p, co in sextic_instances():
        assert sextic.hypothesis(co, p)
        assert sextic.classify(co, p) == case
        want = sextic.closed_form(case, p)
        f = sextic.sextic(co, p)
        poly = slopes.full_np_small_d(f, oracle_fallback=False)
        assert poly.source == "slopes" and poly.slopes == want, (case, p)
        sl, dt = _timed(lambda: oracle.l_polygon(f).slopes)
        assert sl == want, (case, p)
        assert dt <= 300


def test_criterion_04_shift_to_diagonal():
    p = 11
    f = U(p, {3: 1, 2: 3, 1: 3})
    assert oracle.l_polygon(f).slopes == [HALF, HALF]
    g, _ = slopes.normalize_shift(f)
    assert g.is_diagonal()
    diag = gauss.diagonal_slopes(g)
    diag.remove(0)
    assert diag == [HALF, HALF]


def test_criterion_05_septic_tables():
    t = time.perf_counter()
    p = 5
    for a in range(1, 5):
        f = U(p, {7: 1, 4: a})
        res = {s: tables.min_weight_ord(f, s) for s in (2, 3, 4)}
        assert [res[s].ord_p for s in (2, 3, 4)] == [Fraction(1, 4), Fraction(3, 4), Fraction(3, 2)]
        assert all(r.status == "proved" for r in res.values())
        assert res[4].unit_sum == pow(12, -1, p) * a * a * (a**4 + 7) % p
        assert oracle.l_polygon(f).slopes == [Fraction(1, 4)] + [HALF] * 4 + [Fraction(3, 4)]
    assert time.perf_counter() - t < 5


def test_criterion_06_two_variable_tables():
    t = time.perf_counter()
    p = 11
    f = parse_poly("x^3+x*y+y^2", p)
    for k in (1, 2):
        assert oracle.exp_sum_star(f, k, reduce=True) == oracle.exp_sum_star(f, k, reduce=False)
    want_q = {2: HALF, 3: Fraction(1), 4: Fraction(3, 2), 5: Fraction(7, 3) + Fraction(2, 30)}
    want_p6 = Fraction(7, 2) + Fraction(1, 10)
    l0 = oracle.l0_star(f, 6, check=False).ord_p()
    got = {s: tables.min_weight_ord(f, s) for s in range(2, 7)}
    for s, v in want_q.items():
        assert got[s].status == "proved" and got[s].ord_q == v
        assert l0[s] == v  # q = p here
    assert time.perf_counter() - t < 120
    # the oracle and the minimal-weight search agree with each other on c6 ...
    assert got[6].ord_p == l0[6]
    # ... and are compared with the stated value last
    assert got[6].ord_p == want_p6, (
        f"ord_p c6: tables {got[6].ord_p}, oracle {l0[6]}, expected {want_p6}")


def test_criterion_07_gross_koblitz():
    t = time.perf_counter()
    for p, a in ((5, 1), (7, 1), (3, 2), (11, 1)):
        rows = gauss.gross_koblitz_check(p, a)
        assert [r["k"] for r in rows] == list(range(p**a - 1))
        assert all(r["valuation"] == r["sigma"] and r["unit"] == r["gamma_product"] for r in rows)
    assert time.perf_counter() - t < 60


def test_criterion_08_hasse_davenport():
    t = time.perf_counter()
    for p in (5, 7):
        for k in (2, 3):
            rep = gauss.hasse_davenport_check(p, 1, 1, k)
            assert rep["ok"] and rep["checked"] == p - 1
    assert time.perf_counter() - t < 60


def test_criterion_09_gauss_expansion():
    for p in (5, 7):
        f = U(p, {3: 1, 1: 1})
        for k in (1, 2, 3):
            via = gauss.exp_sum_via_gauss(f, k)
            assert _close(via, via.ring.from_cyc(oracle.exp_sum_star(f, k)), via.ring.prec)
        cut = 2 * (p - 1)
        prod = gauss.theorem12_truncated_product(f, 3, val_cutoff=cut)
        ls = oracle.lfunction_star(f, 4, check=False)
        R = prod[0].ring
        assert all(_close(prod[i], R.from_cyc(ls[i]), cut) for i in range(4))
    f = U(7, {3: 1})
    wan = gauss.wan_diagonal_lfunction(f)
    ls = oracle.lfunction_star(f)
    R = wan[0].ring
    assert len(wan) == 4
    assert all(_close(wan[i], R.from_cyc(ls[i]), R.prec) for i in range(4))
    assert all(ls[i].is_zero() for i in range(4, ls.D + 1))


def test_criterion_10_rescaled_series():
    f = U(11, {3: 1, 1: 1})
    D = 6
    ls = oracle.lfunction_star(f, D, check=False)
    a = oracle.l0_star(f, D, check=False)
    b = oracle.l0_star_from_lstar(f, ls)
    assert all(a[i] == b[i] for i in range(D + 1))
    low = [x for x in oracle.series_polygon(ls, 1, 3).slopes if x < 1]
    low0 = [x for x in oracle.series_polygon(a, 1, 3).slopes if x < 1]
    assert low == low0 and low


def test_criterion_11_property_suites():
    import test_properties as tp

    for fn in (tp.test_symmetry_slope_sum_and_integrality, tp.test_shift_invariance,
               tp.test_constant_shift_invariance, tp.test_carry_condition_matches_congruence,
               tp.test_parity_cancellation, tp.test_cor53_bound_on_tables):
        assert fn.hypothesis.inner_test  # decorated with @given
        fn()


CRITERIA = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]


if __name__ == "__main__":  # pragma: no cover
    import sys

    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    for fn in CRITERIA:
        num = int(fn.__name__.split("_")[2])
        try:
            fn()
            print(f"criterion {num:2d}: PASS")
        except AssertionError as exc:
            print(f"criterion {num:2d}: FAIL {exc}")
