from itertools import combinations

import numpy as np
import pytest

import oracles
from conftest import raw
from gwa.core import is_morphism, validate_gwa
from gwa.enumeration import enumerate_ideals
from gwa.ideals import (SubsetMask, _defect, ideal_closure, is_ideal, is_normal_subgroup, quotient_gwa,
                        quotient_map)

A3 = [0, 3, 4]  # the 3-cycles of S3 with the identity


def all_subsets(g):
    for k in range(g.order):
        for extra in combinations(range(1, g.order), k):
            yield SubsetMask.of(g, (0,) + extra)


def test_whole_and_zero_are_normal(s3c):
    assert is_normal_subgroup(SubsetMask.of(s3c, range(6))).ok
    assert is_normal_subgroup(SubsetMask.of(s3c, [0])).ok


def test_transposition_subgroup_not_normal(s3c):
    report = is_normal_subgroup(SubsetMask.of(s3c, [0, 1]))
    assert report.failed == ["normality"]


def test_mask_must_contain_zero(s3c):
    with pytest.raises(ValueError):
        SubsetMask(s3c, [False, True, False, False, False, False])


def test_ideal_examples(s3c):
    assert is_ideal(SubsetMask.of(s3c, range(6))).ok
    assert is_ideal(SubsetMask.of(s3c, [0])).ok
    assert is_ideal(SubsetMask.of(s3c, A3)).ok


@pytest.mark.parametrize("name", ["z2", "z3", "v4", "s3", "s3_conj"])
def test_is_ideal_matches_oracle(fleet, name):
    g = fleet[name]
    d = raw(g)
    for s in all_subsets(g):
        assert is_ideal(s).ok == oracles.is_ideal(d["add"], d["neg"], d["act"], s.elements)


def _absorbs(s, table):
    m = s.members
    return bool(m[table[m]].all())


def test_defect_forms_agree_on_negation_closed_subsets(big_fleet):
    for g in big_fleet:
        left, right = _defect(g, left=True), _defect(g, left=False)
        for s in all_subsets(g):
            assert "ideal-3-equivalence" not in is_ideal(s).failed
            if s.members[g.neg[s.members]].all():
                assert _absorbs(s, left) == _absorbs(s, right)


def test_defect_forms_can_differ_off_subgroups(s3c):
    # {0, (1 2 0)} is not closed under negation; only the right-hand form holds
    s = SubsetMask.of(s3c, [0, 3])
    assert not _absorbs(s, _defect(s3c, left=True))
    assert _absorbs(s, _defect(s3c, left=False))


def test_closure_examples(s3c, z2):
    assert ideal_closure(z2, [0]).elements == [0]
    assert ideal_closure(s3c, range(6)).elements == list(range(6))
    assert ideal_closure(s3c, [1]).elements == list(range(6))
    assert ideal_closure(s3c, [3]).elements == A3


def test_closure_is_smallest_ideal_containing_seed(fleet):
    for name in ("z3", "v4", "s3", "s3_conj"):
        g = fleet[name]
        ideals = list(enumerate_ideals(g))
        for seed in all_subsets(g):
            c = ideal_closure(g, seed)
            assert is_ideal(c).ok
            containing = [i for i in ideals if (i.members >= seed.members).all()]
            smallest = min(containing, key=len)
            assert c == smallest
            # dropping any non-seed element breaks ideal-ness
            for x in set(c.elements) - set(seed.elements):
                m = c.members.copy()
                m[x] = False
                assert not is_ideal(SubsetMask(g, m)).ok


def test_quotient_by_zero_is_relabelling(s3c):
    q = quotient_gwa(s3c, SubsetMask.of(s3c, [0]))
    assert q.same_tables(s3c)


def test_quotient_by_everything_is_trivial(s3c):
    q = quotient_gwa(s3c, SubsetMask.of(s3c, range(6)))
    assert q.order == 1


def test_quotient_s3_by_a3(s3c):
    f = quotient_map(s3c, SubsetMask.of(s3c, A3))
    q = f.target
    assert q.order == 2
    assert validate_gwa(q).ok
    assert np.array_equal(q.act, [[0, 0], [1, 1]])
    assert is_morphism(f).ok
    assert f.map.tolist() == [0, 1, 1, 0, 0, 1]


def test_quotient_requires_ideal(s3c):
    with pytest.raises(ValueError, match="not an ideal"):
        quotient_gwa(s3c, SubsetMask.of(s3c, [0, 1]))
