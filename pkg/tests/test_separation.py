import pytest

from topolab import separation as sep
from topolab.fixtures import FIXTURES
from topolab.spaces import validate_topology

from _naive import from_space


def test_fixture_regularity_verdicts(disjoint_pair_space):
    s = disjoint_pair_space
    assert sep.axiom(s, "regular")
    assert not sep.axiom(s, "strongly-rg-regular")


def test_weak_regularity_fixture_resolved_by_scan():
    # the recorded claim for this space says weakly regular; the scan
    # (x = k against the regular-open set {k}) refutes it
    s = FIXTURES["example-2.6"]
    assert not sep.axiom(s, "weakly-regular")
    assert not sep.axiom(s, "almost-regular")
    assert not sep.axiom(s, "softly-regular")


def test_regularity_fixture_resolved_by_scan():
    # recorded as regular; x = k against the closed set {m} has no
    # disjoint open separation, so the scan says otherwise
    s = FIXTURES["example-2.8"]
    assert not sep.axiom(s, "regular")


def test_discrete_space_satisfies_everything(discrete3):
    for tag in sep.AXIOM_TAGS:
        assert sep.axiom(discrete3, tag), tag
    for tag in sep.VARIANT_TAGS:
        assert sep.scstar_regular_variant(discrete3, tag), tag


def test_klmn_is_scstar_regular(klmn):
    assert sep.axiom(klmn, "scstar-regular")


def test_regular_matches_reference_model(small_spaces):
    for space in small_spaces:
        assert sep.axiom(space, "regular") == from_space(space).regular()


def test_t3_is_conjunction(small_spaces):
    for space in small_spaces:
        assert sep.axiom(space, "scstar-t3") == (
            sep.axiom(space, "scstar-regular") and sep.axiom(space, "scstar-t1")
        )


def test_scstar_compact_is_constant_true(small_spaces, klmn):
    for space in small_spaces[::5] + (klmn,):
        assert sep.axiom(space, "scstar-compact")


def test_variant_equality_on_fixture(disjoint_pair_space):
    s = disjoint_pair_space
    base = sep.scstar_regular_variant(s, "def-2.1")
    assert sep.scstar_regular_variant(s, "t2.10-ii") == base


def test_variant_on_indiscrete(indiscrete2):
    assert isinstance(sep.scstar_regular_variant(indiscrete2, "t2.10-iii"), bool)
    for tag in sep.VARIANT_TAGS:
        assert sep.scstar_regular_variant(indiscrete2, tag) == sep.scstar_regular_variant(
            indiscrete2, "def-2.1"
        )


def test_sierpinski_axioms(sierpinski):
    assert sep.axiom(sierpinski, "weakly-regular")
    assert not sep.axiom(sierpinski, "regular")


def test_classify_space_shape(klmn):
    vec = sep.classify_space(klmn)
    assert tuple(vec) == sep.AXIOM_TAGS + sep.SECONDARY_TAGS + sep.VARIANT_TAGS
    assert vec["scstar-t3"] == (vec["scstar-regular"] and vec["scstar-t1"])
    assert sep.classify_space(klmn) == vec


def test_regular_implies_weaker_axioms(small_spaces):
    for space in small_spaces:
        if sep.axiom(space, "regular"):
            assert sep.axiom(space, "softly-regular")
            assert sep.axiom(space, "almost-regular")
            assert sep.axiom(space, "weakly-regular")
            assert sep.axiom(space, "alpha-regular")
            assert sep.axiom(space, "scstar-regular")
            assert sep.axiom(space, "g-regular")


def test_unknown_tag_raises(klmn):
    with pytest.raises(ValueError):
        sep.axiom(klmn, "nope")
    with pytest.raises(ValueError):
        sep.scstar_regular_variant(klmn, "nope")


def test_scstar_t1_forms_agree_on_small_spaces(small_spaces):
    for space in small_spaces:
        assert sep.axiom(space, "scstar-t1") == sep.axiom(space, "scstar-t1-pairwise")


def test_scstar_normal_forms_agree_on_small_spaces(small_spaces):
    for space in small_spaces:
        assert sep.axiom(space, "scstar-normal") == sep.axiom(space, "scstar-normal-shrinking")
