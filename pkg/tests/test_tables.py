import itertools
from fractions import Fraction

import pytest

from lnewton import tables
from lnewton.congruence import level_orbit_reps
from lnewton.errors import HypothesisFailed, InvalidArgument, RegimeError, SizeExceeded
from lnewton.poly import LaurentPoly, parse_poly

U = LaurentPoly.univariate


def test_digit_sigma():
    assert tables.digit_sigma(0, 5) == 0
    assert tables.digit_sigma(5, 5) == 1
    assert tables.digit_sigma(13, 5) == 5
    with pytest.raises(InvalidArgument):
        tables.digit_sigma(-1, 5)


def test_frac_part():
    assert tables.frac_part(Fraction(-1, 3)) == Fraction(2, 3)
    assert tables.frac_part(2) == 0
    assert tables.frac_part(Fraction(7, 6)) == Fraction(1, 6)


def test_zero_block_passes():
    f = U(11, {3: 1, 1: 1})
    blk = tables.Block.from_k((0, 0), 11, 3)
    assert tables.carry_check(blk, f)
    assert blk.carries([1, 3]) == [(0, 0)] * 3


def test_single_column_equivalence():
    p = 11
    f = U(p, {3: 1, 1: 1})
    for k1 in range(p):
        for k3 in range(p):
            blk = tables.Block.from_k((k1, k3), p, 1)
            assert tables.carry_check(blk, f) == ((k1 + 3 * k3) % (p - 1) == 0)


def test_broken_chain_fails():
    p = 11
    f = U(p, {3: 1, 1: 1})
    # column 0 carries u = 1, column 1 has v = 0
    blk = tables.Block.from_columns([(1, 4), (0, 0)], p)
    (u0, _), (_, v1) = blk.carries([1, 3])
    assert u0 != v1
    assert not tables.carry_check(blk, f)


def test_carry_check_regime():
    with pytest.raises(RegimeError):
        tables.carry_check(tables.Block.from_k((0, 0), 3, 1), U(3, {3: 1, 1: 1}))


def test_block_round_trip():
    p = 7
    f = U(p, {3: 1, 1: 1})
    for row in level_orbit_reps([(1,), (3,)], p, 2).tolist():
        blk = tables.Block.from_k(row, p, 2)
        assert tables.carry_check(blk, f)
        assert tables.block_to_solution(blk, f).k(p) == tuple(row)


def test_zero_table():
    f = U(5, {7: 1, 4: 1})
    t = tables.DigitTable((), 5)
    assert tables.table_valuation(t) == 0
    assert tables.unit_part(t, f) == 1


def test_single_column_unit():
    p = 7
    f = U(p, {3: 1, 1: 3})
    blk = tables.Block.from_columns([(1, 0)], p)
    assert tables.unit_part(tables.DigitTable((blk,), p), f) == (-3) % p


def test_ex1_c2_table():
    p = 5
    f = U(p, {7: 1, 4: 2})
    res = tables.min_weight_ord(f, 2)
    assert res.weight == 1 and res.ord_p == Fraction(1, 4)
    assert all(tables.table_valuation(t) == Fraction(1, 4) for t in res.tables)


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_ex1_orders(a):
    p = 5
    f = U(p, {7: 1, 4: a})
    got = {s: tables.min_weight_ord(f, s) for s in (2, 3, 4)}
    assert [got[s].ord_p for s in (2, 3, 4)] == [Fraction(1, 4), Fraction(3, 4), Fraction(3, 2)]
    assert all(r.status == "proved" for r in got.values())
    assert got[4].unit_sum == pow(12, -1, p) * a * a * (a**4 + 7) % p


def test_ex2_low_orders():
    p = 11
    f = parse_poly("x^3+x*y+y^2", p)
    res = {s: tables.min_weight_ord(f, s) for s in (1, 2, 3, 4, 5)}
    assert res[1].ord_q == 0
    assert res[2].ord_q == Fraction(1, 2)
    assert res[3].ord_q == 1
    assert res[4].ord_q == Fraction(3, 2)
    assert res[5].ord_q == Fraction(7, 3) + Fraction(2, 3 * (p - 1))
    assert all(r.status == "proved" for r in res.values())


def test_ex2_c2_over_q():
    # ord_q of a table is ord_p divided by a
    t = tables.DigitTable((tables.Block.from_k((3, 4), 11, 2),), 11, 2)
    assert tables.table_valuation(t, "q") == tables.table_valuation(t) / 2


def test_cor53_bound_on_minimal_tables():
    p = 5
    f = U(p, {7: 1, 4: 1})
    for s in (2, 3, 4):
        for t in tables.min_weight_ord(f, s).tables:
            assert tables.table_valuation(t) >= tables.cor53_bound(t, f)


# -- permutations ---------------------------------------------------------------------

def test_injective_map_makes_everything_simple():
    fmap = (0, 1, 2, 3)
    for a in itertools.permutations(range(4)):
        assert tables.is_f_simple(a, fmap)


def test_constant_map():
    # G_f is all of S_n, so the identity is f-simple only when n = 1, and any
    # other permutation commutes with itself
    assert tables.is_f_simple((0,), (0,))
    for n in (2, 3, 4):
        fmap = (0,) * n
        for a in itertools.permutations(range(n)):
            assert not tables.is_f_simple(a, fmap)
            assert not tables.is_f_simple(a, fmap, "fast")


def test_seven_points_two_fibers():
    fmap = (0, 0, 0, 0, 1, 1, 1)
    a = (1, 2, 3, 0, 5, 6, 4)  # (1 2 3 4)(5 6 7)
    assert tables.is_f_simple(a, fmap, "brute") == tables.is_f_simple(a, fmap, "fast")


def test_f_simple_rejects_non_permutation():
    with pytest.raises(InvalidArgument):
        tables.is_f_simple((0, 0), (0, 1))


def test_brute_force_budget():
    with pytest.raises(SizeExceeded):
        tables.is_f_simple(tuple(range(10)), (0,) * 10, budget=1000)


def test_parity_full_group_constant_map():
    for n in range(2, 6):
        G = list(itertools.permutations(range(n)))
        rep = tables.parity_cancellation_check(G, (0,) * n)
        assert rep.even_non_simple == rep.odd_non_simple


def test_parity_trivial_group():
    rep = tables.parity_cancellation_check([(0, 1, 2)], (0, 1, 2))
    assert rep.equal and rep.even_non_simple == 0


def test_parity_requires_stability():
    with pytest.raises(HypothesisFailed):
        tables.parity_cancellation_check([(0, 1, 2)], (0, 0, 1))


def test_carry_group_is_coset_of_u_group():
    cols = [(1, 0, (1, 0)), (0, 1, (0, 1)), (1, 1, (1, 1)), (1, 1, (1, 1))]
    G, fmap = tables.carry_group(cols)
    assert G
    a = G[0]
    Ginv = {tables.compose(tables.inverse(a), g) for g in G}
    # a^{-1} G permutes the columns while keeping v(a(w)) = u(w) fixed
    assert Ginv == {g for g in itertools.permutations(range(4))
                    if all(cols[a[g[w]]][1] == cols[a[w]][1] for w in range(4))}
    assert tables.parity_cancellation_check(G, fmap).equal
