from fractions import Fraction

import pytest

from lnewton import oracle, slopes
from lnewton.errors import RegimeError
from lnewton.poly import LaurentPoly
from lnewton.sextic import sextic

U = LaurentPoly.univariate


def _fact(p, n):
    return slopes.factorials(p)[0][n]


def test_shift_to_diagonal():
    p = 11
    f = U(p, {3: 1, 2: 3, 1: 3})
    g, b = slopes.normalize_shift(f)
    assert g == U(p, {3: 1})
    assert b == (-1) % p  # f(x - a2/3) with a2 = 3


def test_shift_leaves_reduced_polynomial():
    f = U(13, {5: 1, 3: 2, 1: 1})
    assert slopes.normalize_shift(f) == (f, 0)


def test_shift_clears_next_to_top():
    g, _ = slopes.normalize_shift(U(7, {4: 1, 3: 4, 1: 1}))
    assert g.degree == 4 and 3 not in g.as_dict()


def test_shift_refuses_p_dividing_degree():
    with pytest.raises(RegimeError):
        slopes.normalize_shift(U(5, {5: 1, 4: 1}))


@pytest.mark.parametrize("p", [11, 17, 23])
def test_c_cubic(p):
    f = U(p, {3: 1, 1: 2})
    assert slopes.enumerate_C(f, (p + 1) // 3, 1, 1) == [[1]]


@pytest.mark.parametrize("p", [17, 23])
def test_c_sextic(p):
    f = sextic((1, 1, 1, 1), p)
    assert slopes.enumerate_C(f, (p + 1) // 6, 1, 1) == [[0, 0, 0, 1]]
    got = sorted(s.h for s in slopes.enumerate_C(f, (p + 1) // 3, 2, 2))
    assert got == [(0, 0, 0, 2), (0, 1, 0, 0)]


def test_c_digits_stay_below_p():
    f = U(7, {3: 1, 1: 1})
    for r in range(12):
        for u in range(4):
            for v in range(7):
                for sol in slopes.enumerate_C(f, r, u, v):
                    assert all(0 <= k < 7 for k in sol.h) and 0 <= sol.top < 7
                    assert 3 * sol.top + sol.h[0] == u * 7 - v


@pytest.mark.parametrize("p,a1", [(11, 1), (11, 3), (17, 5)])
def test_f_cubic(p, a1):
    f = U(p, {3: 1, 1: a1})
    r = (p + 1) // 3
    assert slopes.F_of(f, r, 1, 1) == a1 * pow(_fact(p, (p - 2) // 3), -1, p) % p
    assert slopes.F_r_s(f, r, 2) == slopes.F_of(f, r, 1, 1)


@pytest.mark.parametrize("p,a2", [(11, 1), (19, 4)])
def test_f_quartic(p, a2):
    f = U(p, {4: 1, 2: a2, 1: 1})
    want = a2 * pow(_fact(p, (p - 3) // 4), -1, p) % p
    assert slopes.F_of(f, (p + 1) // 4, 1, 1) == want


def test_f_empty_set_is_zero():
    f = U(11, {3: 1, 1: 1})
    assert slopes.enumerate_C(f, 1, 1, 1) == []
    assert slopes.F_of(f, 1, 1, 1) == 0


def test_f_two_remark_closed_form():
    p = 11
    r = (p + 1) // 3
    for a2 in range(1, p):
        for a1 in (1, 2, 5):
            f = U(p, {3: 1, 2: a2, 1: a1})
            want = (3 * a1 - a2 * a2) * pow(3 * _fact(p, (p - 2) // 3), -1, p) % p
            assert slopes.F_r_s(f, r, 2) == want


def test_f_one_at_zero():
    assert slopes.F_r_s(U(11, {3: 1, 1: 1}), 0, 1) == 1


def test_two_sets_expand_to_principal_minors():
    f = U(13, {4: 1, 2: 3, 1: 5})
    R = 12
    P = slopes._transfer_matrices(f, R, 4)[()]
    e = slopes._set_sums({(): P}, 2, 13)
    direct = [0] * (R + 1)
    for i in range(5):
        for j in range(i + 1, 5):
            for a in range(R + 1):
                for b in range(R + 1 - a):
                    direct[a + b] += int(P[i, i, a] * P[j, j, b] - P[i, j, a] * P[j, i, b])
    assert [x % 13 for x in direct] == [int(x) for x in e]


def test_all_top_digit_row_is_not_a_new_orbit():
    # x^5 over F_7: the column with six copies of x^5 is k = 6 = p - 1, i.e. r = 1,
    # so c_2 of L* vanishes and nothing may be reported for s = 2
    f = U(7, {5: 1})
    assert [s.h for s in slopes.enumerate_C(f, 6, 5, 5)] == [(0, 0, 0)]
    assert not any(slopes.F_series(f, 2, 8))
    assert slopes.lambda_s(f, 2).status != "proved"
    assert oracle.lfunction_star(f, 5)[2].is_zero()


@pytest.mark.parametrize("p", [7, 11, 19])
def test_lambda_quartic(p):
    rep = slopes.lambda_s(U(p, {4: 1, 2: 1, 1: 1}), 2)
    assert rep.status == "proved" and rep.lambda_s == Fraction(p + 1, 4 * (p - 1))
    rep = slopes.lambda_s(U(p, {4: 1, 1: 1}), 2)
    assert rep.status == "proved" and rep.lambda_s == Fraction(p + 5, 4 * (p - 1))


@pytest.mark.parametrize("p,d", [(7, 3), (13, 4), (11, 5), (13, 6)])
def test_lambda_when_p_is_1_mod_d(p, d):
    f = U(p, {d: 1, 1: 1}) if p >= d + 1 else U(p, {d: 1})
    for s in range(1, 3):
        rep = slopes.lambda_s(f, s)
        assert rep.lambda_s == Fraction(s - 1, d)


def test_regime_checks():
    with pytest.raises(RegimeError):
        slopes.lambda_s(U(3, {3: 1, 1: 1}), 2)
    with pytest.raises(RegimeError):
        slopes.lambda_s(U(13, {3: 1, 1: 1}), 4)
    with pytest.raises(RegimeError):
        slopes.lambda_s(LaurentPoly.from_terms(11, [((1, 1), 1)]), 1)


def test_full_polygon_cubic():
    for p in (5, 11, 17):
        poly = slopes.full_np_small_d(U(p, {3: 1, 1: 1}), oracle_fallback=False)
        lam = Fraction(p + 1, 3 * (p - 1))
        assert poly.source == "slopes"
        assert poly.slopes == [lam, 1 - lam]


def test_full_polygon_case_i():
    p = 17
    poly = slopes.full_np_small_d(sextic((1, 0, 0, 0), p), oracle_fallback=False)
    w1, w2 = Fraction(p + 1, 6 * (p - 1)), Fraction(p + 1, 3 * (p - 1))
    assert poly.slopes == sorted([w1, w2, Fraction(1, 2), 1 - w2, 1 - w1])


def test_full_polygon_case_xi():
    p = 17
    poly = slopes.full_np_small_d(sextic((0, 1, 0, 0), p), oracle_fallback=False)
    w = Fraction(p + 1, 4 * (p - 1))
    assert poly.slopes == [w, w, Fraction(1, 2), 1 - w, 1 - w]


def test_mirror_covers_unproved_index():
    # s = 4 is not decided below its threshold but its mirror s = 3 is
    poly = slopes.full_np_small_d(U(11, {6: 1, 1: 1}), oracle_fallback=False)
    assert poly.source == "slopes"
    assert poly.slopes == [Fraction(1, 2)] * 5
    assert poly.slopes == oracle.l_polygon(U(11, {6: 1, 1: 1})).slopes


@pytest.mark.parametrize("p,co", [(17, (0, 1, 1, 8)), (23, (0, 1, 20, 7))])
def test_slopes_agree_with_oracle_on_sextics(p, co):
    f = sextic(co, p)
    assert slopes.full_np_small_d(f, oracle_fallback=False).slopes == oracle.l_polygon(f).slopes
