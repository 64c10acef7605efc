from itertools import permutations

import numpy as np
import pytest

import oracles
from conftest import raw
from gwa.core import (FiniteGwa, GroupTable, GwaMorphism, StructureError, conjugation_gwa,
                      cyclic_group, dihedral_group, elementary_abelian, identity_action_gwa,
                      identity_morphism, is_abelian, is_morphism, is_reduced, klein_four,
                      quaternion_group, symmetric_group, trivial_group, validate_group,
                      validate_gwa, validate_self_action)

GROUPS = [trivial_group(), cyclic_group(2), cyclic_group(3), klein_four(), cyclic_group(4),
          symmetric_group(3), dihedral_group(4), quaternion_group(), elementary_abelian(3)]


def test_z2_is_a_group():
    z2 = GroupTable("Z2", [[0, 1], [1, 0]], [0, 1])
    assert validate_group(z2).ok


def test_missing_inverse_reported():
    report = validate_group(GroupTable("bad", [[0, 1], [1, 1]], [0, 1]))
    assert not report.ok
    assert report.witnesses("inverse") == [(1,)]


def test_s3_group_matches_oracle():
    s3 = symmetric_group(3)
    assert s3.order == 6
    assert validate_group(s3).ok
    assert oracles.is_group(s3.add.tolist(), s3.neg.tolist())


def test_non_associative_table_caught():
    # a Latin square with identity 0 that is not associative (order 5 loop)
    add = [[0, 1, 2, 3, 4],
           [1, 0, 3, 4, 2],
           [2, 4, 0, 1, 3],
           [3, 2, 4, 0, 1],
           [4, 3, 1, 2, 0]]
    g = GroupTable("loop5", add, [0, 1, 2, 3, 4])
    report = validate_group(g)
    assert "assoc" in report.failed
    assert not oracles.is_group(add, [0, 1, 2, 3, 4])
    for w in report.witnesses("assoc"):
        x, y, z = w
        assert add[add[x][y]][z] != add[x][add[y][z]]


@pytest.mark.parametrize("shape", [(2, 3), (3,)])
def test_structural_errors(shape):
    with pytest.raises(StructureError):
        GroupTable("x", np.zeros(shape, dtype=int), [0, 1])


def test_out_of_range_entry_is_structural():
    with pytest.raises(StructureError):
        FiniteGwa("x", [[0, 1], [1, 0]], [0, 1], [[0, 2], [1, 1]])


def test_z2_identity_action_ok(z2):
    assert validate_self_action(z2).ok


def test_z2_broken_action():
    z2 = cyclic_group(2)
    g = FiniteGwa("broken", z2.add, z2.neg, [[0, 0], [1, 0]])
    report = validate_self_action(g)
    assert report.failed == ["eps-1"]
    assert report.violations == [("eps-1", (1, 1, 1))]
    assert not validate_gwa(g).ok


def test_s3_conjugation_matches_oracle(s3c):
    assert validate_self_action(s3c).ok
    d = raw(s3c)
    assert oracles.is_self_action(d["add"], d["act"])


def test_trivial_and_z3(trivial, z3):
    assert validate_gwa(trivial).ok
    assert validate_gwa(z3).ok


@pytest.mark.parametrize("g", GROUPS, ids=lambda g: g.name)
def test_constructors_give_valid_objects(g):
    for x in (identity_action_gwa(g), conjugation_gwa(g)):
        assert validate_gwa(x).ok
        d = raw(x)
        assert oracles.is_self_action(d["add"], d["act"])


def test_conjugation_on_abelian_is_identity():
    z3 = cyclic_group(3)
    assert np.array_equal(conjugation_gwa(z3).act, identity_action_gwa(z3).act)


def test_conjugation_formula():
    s3 = symmetric_group(3)
    c = conjugation_gwa(s3)
    for g in range(6):
        for h in range(6):
            assert c.act[g, h] == s3.add[s3.add[s3.neg[h], g], h]


def test_invalid_grouptable_rejected():
    with pytest.raises(StructureError):
        identity_action_gwa(GroupTable("bad", [[0, 1], [1, 1]], [0, 1]))


def test_reducedness_examples(z2, trivial, s3c):
    assert is_reduced(z2).ok
    assert is_reduced(trivial).ok
    report = is_reduced(s3c)
    assert "reduced-1" in report.failed


def test_reduced_1_skips_zero_exponent():
    # with y = 0 condition (1) would demand commutativity; S3-identity fails only on y != 0
    s3 = identity_action_gwa(symmetric_group(3))
    report = is_reduced(s3)
    assert all(w[1] != 0 for w in report.witnesses("reduced-1"))


@pytest.mark.parametrize("g", GROUPS, ids=lambda g: g.name)
def test_reduced_identity_action_iff_abelian(g):
    x = identity_action_gwa(g)
    assert is_reduced(x).ok == is_abelian(g)
    d = raw(x)
    assert oracles.is_reduced(d["add"], d["act"]) == is_abelian(g)


def test_identity_and_zero_morphisms(s3c, z2):
    assert is_morphism(identity_morphism(s3c)).ok
    assert is_morphism(GwaMorphism(s3c, z2, np.zeros(6, dtype=int))).ok


def test_non_equivariant_additive_bijection():
    s3 = symmetric_group(3)
    conj, ident = conjugation_gwa(s3), identity_action_gwa(s3)
    found = None
    for perm in permutations(range(6)):
        if perm[0] != 0:
            continue
        f = GwaMorphism(conj, ident, np.array(perm))
        report = is_morphism(f)
        if "additive" not in report.failed:
            found = report
            break
    assert found is not None
    assert found.failed == ["equivariance"]


def test_map_out_of_range(z2):
    with pytest.raises(StructureError):
        GwaMorphism(z2, z2, [0, 2])


def test_composition_of_morphisms(s3c, z2):
    sign = np.array([0, 1, 1, 0, 0, 1])  # S3 -> Z2 parity, conjugation -> identity
    f = GwaMorphism(s3c, z2, sign)
    assert is_morphism(f).ok
    assert is_morphism(identity_morphism(s3c).compose(f)).ok


def test_report_cap_and_counts():
    z2 = cyclic_group(2)
    g = FiniteGwa("x", z2.add, z2.neg, [[0, 0], [1, 0]])
    report = validate_self_action(g, cap=1)
    assert report.counts["eps-1"] == 1
    with pytest.raises(ValueError):
        validate_self_action(g, cap=0)
    s3 = symmetric_group(3)
    bad = FiniteGwa("y", s3.add, s3.neg, np.zeros((6, 6), dtype=int))
    report = validate_self_action(bad, cap=3)
    assert len(report.witnesses("eps-2")) == 3
    assert report.counts["eps-2"] == 5
    assert report.witnesses("eps-2") == sorted(report.witnesses("eps-2"))


def test_text_report_format():
    z2 = cyclic_group(2)
    g = FiniteGwa("x", z2.add, z2.neg, [[0, 0], [1, 0]])
    assert validate_gwa(g).to_text() == "eps-1 (1,1,1)"
