import pytest

from nonfree.errors import DegreeMismatch, InputError, OrderBoundExceeded
from nonfree.perm import (
    Permutation,
    Subgroup,
    generate_group,
    group_from_json,
    subgroup_closure,
)


def test_composition_convention():
    # (p * q)(x) = p(q(x))
    p = Permutation((1, 0, 2))
    q = Permutation((0, 2, 1))
    pq = p * q
    for x in range(3):
        assert pq(x) == p(q(x))
    assert pq.images == (1, 2, 0)


def test_permutation_basics():
    p = Permutation.from_cycles(4, [(0, 1, 2)])
    assert p.images == (1, 2, 0, 3)
    assert p.inverse() * p == Permutation.identity(4)
    assert p.order() == 3
    assert p.cycle_type() == {3: 1, 1: 1}
    with pytest.raises(InputError):
        Permutation((0, 0, 1))
    with pytest.raises(InputError):
        Permutation.from_cycles(3, [(0, 1), (1, 2)])


def test_identity_sorts_first(groups):
    for group in groups.values():
        assert group.elements[0].is_identity()
        assert group.identity_index == 0
        images = [p.images for p in group.elements]
        assert images == sorted(images)


def test_cayley_and_inverse_tables(s3):
    T = s3.mul_table
    inv = s3.inv_table
    n = s3.order
    e = s3.identity_index
    for a in range(n):
        assert T[a, inv[a]] == e
        assert T[inv[a], a] == e
    # associativity spot check on all triples (order 6 is cheap)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert T[T[a, b], c] == T[a, T[b, c]]


def test_conjugacy_classes_match_full_scan(groups):
    from oracles import conjugacy_classes_full_scan

    for name in ("S3", "D4", "Q8", "A4", "S4", "D6"):
        group = groups[name]
        assert [tuple(c) for c in group.classes] == conjugacy_classes_full_scan(group)


def test_class_sizes(s4, s5):
    assert sorted(len(c) for c in s4.classes) == [1, 3, 6, 6, 8]
    assert sorted(len(c) for c in s5.classes) == [1, 10, 15, 20, 20, 24, 30]


def test_generate_group_bounds():
    with pytest.raises(DegreeMismatch):
        generate_group([Permutation((1, 0))], degree=3)
    with pytest.raises(OrderBoundExceeded):
        generate_group(
            [
                Permutation((1, 0, 2, 3, 4)),
                Permutation((1, 2, 3, 4, 0)),
            ],
            order_bound=100,
        )


def test_group_json_roundtrip(s3):
    doc = s3.to_json()
    again = group_from_json(doc)
    assert again.order == s3.order
    assert [p.images for p in again.elements] == [p.images for p in s3.elements]
    with pytest.raises(InputError):
        group_from_json({"degree": 3})


def test_word_balls(s3):
    balls = s3.word_balls()
    # B_0 = {identity}; the last ball is the whole group
    assert balls[0] == 1 << s3.identity_index
    assert balls[-1] == (1 << s3.order) - 1
    for a, b in zip(balls, balls[1:]):
        assert a & b == a and a != b


def test_subgroup_closure(s4):
    # closure of a transposition and a 4-cycle is everything
    t = s4._index[(1, 0, 2, 3)]
    c = s4._index[(1, 2, 3, 0)]
    assert subgroup_closure(s4, [t, c]).order == 24
    assert subgroup_closure(s4, []).members == (s4.identity_index,)


def test_subgroup_contains(s3):
    H = subgroup_closure(s3, [s3._index[(1, 0, 2)]])
    assert H.order == 2
    assert s3.identity_index in H
    assert H.contains_subgroup(Subgroup(s3, (s3.identity_index,)))


def test_exponent(groups):
    assert groups["S5"].exponent == 60
    assert groups["Q8"].exponent == 4
    assert groups["A4"].exponent == 6
