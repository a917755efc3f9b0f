from fractions import Fraction

import pytest

from lnewton.congruence import (SolutionVec, count_check, enumerate_H, kernel_size,
                                level_orbit_reps, orbit_decompose, orbit_length, sp_qd)
from lnewton.errors import NotClosed

CUBIC = [(3,), (1,)]  # x^3 + x


def test_h_for_cubic_plus_linear():
    H = enumerate_H(CUBIC, 7, 1)
    assert len(H) == 6
    assert SolutionVec((Fraction(0), Fraction(0)), 1) in H
    assert all(s.satisfies(CUBIC) for s in H)


def test_h_for_pure_cubic():
    H = enumerate_H([(3,)], 7, 1)
    assert [s.r for s in H] == [(Fraction(0),), (Fraction(1, 3),), (Fraction(2, 3),)]


def test_h_brute_force():
    N = 6
    brute = [(a, b) for a in range(N) for b in range(N) if (3 * a + b) % N == 0]
    assert sorted(s.k(7) for s in enumerate_H(CUBIC, 7, 1)) == sorted(brute)


def test_exact_period_level_one_is_everything():
    assert sp_qd(CUBIC, 7, 1) == enumerate_H(CUBIC, 7, 1)


def test_level_two_count():
    S = sp_qd(CUBIC, 7, 2)
    assert len(S) == 42
    rep = count_check(CUBIC, 7, 2)
    assert rep["formula"] == 42 and rep["match"] and rep["hypothesis"]


def test_levels_partition_h():
    q, d = 5, 4
    union = []
    for e in (1, 2, 4):
        union += [SolutionVec.from_k(s.k(q, d), q, d) for s in
                  (SolutionVec(r.r, d) for r in sp_qd(CUBIC, q, e))]
    assert sorted(union) == sorted(enumerate_H(CUBIC, q, d))


def test_orbit_decomposition():
    zero = SolutionVec((Fraction(0),), 1)
    assert orbit_decompose([zero], 7).orbits == ((zero, 1),)
    dec = orbit_decompose(enumerate_H(CUBIC, 7, 2), 7)
    assert dec.lengths == [1, 2]
    for rep, L in dec.orbits:
        assert orbit_length(rep, 7) == L


def test_orbit_decompose_rejects_open_sets():
    r = SolutionVec((Fraction(1, 48), Fraction(45, 48)), 2)
    with pytest.raises(NotClosed):
        orbit_decompose([r], 7)


def test_orbit_reps_cover_stratum():
    q, d = 5, 2
    reps = level_orbit_reps(CUBIC, q, d)
    assert sum(d for _ in reps) == len(sp_qd(CUBIC, q, d))


def test_kernel_size_two_variables():
    V = [(3, 0), (1, 1), (0, 2)]
    for N in (10, 12, 120):
        brute = sum(1 for a in range(N) for b in range(N) for c in range(N)
                    if (3 * a + b) % N == 0 and (b + 2 * c) % N == 0)
        assert kernel_size(V, N) == brute
