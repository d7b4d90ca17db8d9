import itertools

import pytest

from topolab import enumeration as en
from topolab.maps import FiniteMap, all_assignments, map_property, preimage
from topolab.spaces import Space, validate_topology


def test_labeled_counts_both_routes():
    expected = {1: 1, 2: 4, 3: 29, 4: 355}
    for n, count in expected.items():
        naive = en.labeled_topologies(n, "naive")
        pre = en.labeled_topologies(n, "preorder")
        assert len(naive) == count
        assert [s.opens for s in naive] == [s.opens for s in pre]


def test_five_points_needs_preorder_route():
    assert len(en.labeled_topologies(5)) == 6942
    with pytest.raises(en.BoundExceeded):
        en.labeled_topologies(5, "naive")
    with pytest.raises(en.BoundExceeded):
        en.labeled_topologies(6)


def test_canonical_form_relabeling_invariance(sierpinski):
    other = validate_topology(2, [0, 2, 3], name="sierpinski-b")
    assert en.canonical_form(sierpinski) == en.canonical_form(other)

    discrete = validate_topology(2, [0, 1, 2, 3])
    swapped = Space(2, ("b", "a"), discrete.opens)
    assert en.canonical_form(discrete) == en.canonical_form(swapped)


def test_canonical_form_under_all_permutations():
    for space in en.labeled_topologies(3):
        base = en.canonical_form(space)
        for perm in itertools.permutations(range(space.n)):
            permuted = Space(
                space.n,
                space.labels,
                tuple(sorted(en._apply_perm(u, perm) for u in space.opens)),
            )
            assert en.canonical_form(permuted) == base


def test_homeomorphism_class_counts():
    assert len(en.homeomorphism_classes(3)) == 9
    assert len(en.homeomorphism_classes(4)) == 33


def test_class_representatives_are_canonical():
    for rep in en.homeomorphism_classes(3):
        assert en.canonical_form(rep) == rep.opens


def test_classes_partition_labeled_spaces():
    reps = {rep.opens for rep in en.homeomorphism_classes(3)}
    for space in en.labeled_topologies(3):
        assert en.canonical_form(space) in reps


def test_enumerate_topologies_streams(klmn):
    spaces = list(en.enumerate_topologies(2))
    assert len(spaces) == 4
    reps = list(en.enumerate_topologies(2, up_to_homeo=True))
    assert len(reps) == 3


def test_enumerate_maps_counts(sierpinski):
    two = en.labeled_topologies(2)[0]
    assert len(list(en.enumerate_maps(two, two))) == 4
    assert len(list(en.enumerate_maps(two, two, ("surjective",)))) == 2

    # direct continuity scan over the four assignments is the oracle
    expected = 0
    for assign in all_assignments(sierpinski, sierpinski):
        f = FiniteMap(sierpinski, sierpinski, assign)
        expected += all(
            preimage(f, v) in set(sierpinski.opens) for v in sierpinski.opens
        )
    got = list(en.enumerate_maps(sierpinski, sierpinski, ("continuous",)))
    assert len(got) == expected == 3


def test_enumerate_maps_bound():
    with pytest.raises(en.BoundExceeded):
        next(en.enumerate_maps(en.labeled_topologies(5)[0], en.labeled_topologies(2)[0]))


def test_all_spaces_up_to():
    spaces = en.all_spaces_up_to(3)
    assert len(spaces) == 1 + 4 + 29
    assert [s.n for s in spaces] == sorted(s.n for s in spaces)
