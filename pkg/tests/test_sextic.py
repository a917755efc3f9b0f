from fractions import Fraction

import pytest

from lnewton import reproduce, sextic
from lnewton.errors import HypothesisFailed, InvalidArgument, RegimeError


@pytest.mark.parametrize("case,insts", sorted(reproduce.SEXTIC_INSTANCES.items()))
def test_pinned_instances_classify(case, insts):
    for p, co in insts.items():
        assert sextic.hypothesis(co, p)
        assert sextic.classify(co, p) == case


def test_remark_instance_is_case_ii():
    assert sextic.classify((3, 3, 6, 2), 17) == "ii"


def test_hypothesis():
    assert not sextic.hypothesis((1, 1, 1, 1), 11)  # needs p >= 16
    assert sextic.hypothesis((1, 1, 1, 1), 17)
    assert not sextic.hypothesis((0, 0, 0, 1), 13)  # 13 = 1 mod 6
    with pytest.raises(HypothesisFailed):
        sextic.classify((1, 1, 1, 1), 11)


def test_closed_forms_are_symmetric():
    for p in (11, 17, 23, 29):
        for case in sextic.CASES:
            sl = sextic.closed_form(case, p)
            assert len(sl) == 5
            assert sorted(1 - x for x in sl) == sl
            assert sum(sl) == Fraction(5, 2)


def test_closed_form_values():
    p = 17
    assert sextic.closed_form("xi", p) == sorted([Fraction(18, 64)] * 2 + [Fraction(1, 2)]
                                                 + [Fraction(46, 64)] * 2)
    assert sextic.closed_form("i", 11)[0] == Fraction(12, 60)
    with pytest.raises(RegimeError):
        sextic.closed_form("xii", p)


def test_pure_sextic_has_no_case():
    assert sextic.classify((0, 0, 0, 0), 11) is None


def test_unknown_suite():
    with pytest.raises(InvalidArgument):
        reproduce.run_suite("nope")


@pytest.mark.parametrize("sid", ["gk", "hd", "congruence", "prop4.5", "thm2.2", "thm1.2", "rmk7.2"])
def test_light_suites_pass(sid):
    rows = reproduce.run_suite(sid)
    assert rows and all(r["ok"] for r in rows), [r for r in rows if not r["ok"]]


def test_remark_filter_suite():
    rows = reproduce.suite_rmk76()
    assert all(r["ok"] for r in rows), [r for r in rows if not r["ok"]]
