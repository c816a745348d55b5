from fractions import Fraction

import pytest

from nonfree.errors import LatticeBoundExceeded
from nonfree.lattice import (
    conjugate_subgroup,
    enumerate_subgroups,
    is_abnormal,
    lattice_report,
    membership_set,
    normalization_tower,
    normalizer,
    weak_distance,
)
from nonfree.registry import named_group

# subgroup and orbit counts, frozen after checking against the oracles below
EXPECTED_COUNTS = {
    "C2": (2, 2),
    "C2xC2": (5, 5),
    "S3": (6, 4),
    "D4": (10, 8),
    "Q8": (6, 6),
    "A4": (10, 5),
    "S4": (30, 11),
    "D6": (16, 10),
    "S5": (156, 19),
}


def test_counts_match_frozen(groups):
    for name, (n_sub, n_orb) in EXPECTED_COUNTS.items():
        lat = enumerate_subgroups(groups[name])
        assert len(lat.subgroups) == n_sub, name
        assert len(lat.orbits) == n_orb, name


def test_counts_match_subset_scan_oracle(groups):
    from oracles import subgroups_by_subset_scan

    for name in ("C2", "C2xC2", "S3", "Q8"):
        group = groups[name]
        lat = enumerate_subgroups(group)
        assert {s.members for s in lat.subgroups} == subgroups_by_subset_scan(group)


def test_counts_match_cyclic_join_oracle(groups):
    from oracles import subgroups_by_cyclic_joins

    for name in ("D4", "A4", "S4", "D6"):
        group = groups[name]
        lat = enumerate_subgroups(group)
        assert {s.members for s in lat.subgroups} == subgroups_by_cyclic_joins(group)


def test_lattice_sorted_and_indexed(groups):
    for group in groups.values():
        lat = enumerate_subgroups(group)
        keys = [(s.order, s.members) for s in lat.subgroups]
        assert keys == sorted(keys)
        for i, s in enumerate(lat.subgroups):
            assert lat.index_of(s) == i
        assert lat.subgroups[0].members == (group.identity_index,)
        assert lat.subgroups[-1].order == group.order


def test_normalizers_match_scan(s4):
    from oracles import normalizer_by_scan

    lat = enumerate_subgroups(s4)
    for i, s in enumerate(lat.subgroups):
        expected = normalizer_by_scan(s4, s.members)
        assert lat.subgroups[lat.normalizer_indices[i]].members == expected
        assert normalizer(s).members == expected


def test_conjugation_table_consistent(s4):
    lat = enumerate_subgroups(s4)
    for t, g in enumerate(s4.generator_indices):
        for i, s in enumerate(lat.subgroups):
            assert conjugate_subgroup(s, g).members == lat.subgroups[
                int(lat.conj_table[t, i])
            ].members


def test_s3_abnormal_subgroups(s3):
    lat = enumerate_subgroups(s3)
    abnormal = [i for i in range(len(lat.subgroups)) if is_abnormal(lat, i)]
    orders = sorted(lat.subgroups[i].order for i in abnormal)
    assert orders == [2, 2, 2, 6]


def test_q8_all_normal(groups):
    lat = enumerate_subgroups(groups["Q8"])
    assert all(len(orbit) == 1 for orbit in lat.orbits)
    assert all(
        lat.subgroups[lat.normalizer_indices[i]].order == 8
        for i in range(len(lat.subgroups))
    )


def test_normalization_tower_d4(groups):
    d4 = groups["D4"]
    lat = enumerate_subgroups(d4)
    # a reflection subgroup normalizes up twice before stabilizing
    start = next(
        i
        for i, s in enumerate(lat.subgroups)
        if s.order == 2 and not is_abnormal(lat, i)
        and lat.subgroups[lat.normalizer_indices[i]].order == 4
    )
    tower = normalization_tower(lat, start)
    assert [h.order for h in tower] == [2, 4, 8]


def test_tower_is_monotone_everywhere(groups):
    for group in groups.values():
        lat = enumerate_subgroups(group)
        for i in range(len(lat.subgroups)):
            tower = normalization_tower(lat, i)
            orders = [h.order for h in tower]
            assert orders == sorted(orders)
            assert tower[-1].order == normalizer(tower[-1]).order


def test_membership_sets(s3):
    lat = enumerate_subgroups(s3)
    for g in range(s3.order):
        L = membership_set(lat, g)
        for i, s in enumerate(lat.subgroups):
            assert (i in L) == (g in s)


def test_weak_distance(s3):
    lat = enumerate_subgroups(s3)
    order2 = [s for s in lat.subgroups if s.order == 2]
    assert weak_distance(order2[0], order2[1]) == Fraction(1, 2)
    assert weak_distance(order2[0], order2[0]) == 0


def test_lattice_bound():
    with pytest.raises(LatticeBoundExceeded):
        enumerate_subgroups(named_group("S4"), max_subgroups=10)


def test_lattice_report_shape(s3):
    lat = enumerate_subgroups(s3)
    rep = lattice_report(lat)
    assert len(rep["subgroups"]) == 6
    assert rep["abnormal_indices"] == [1, 2, 3, 5]
    assert all(
        set(row) >= {"index", "order", "normalizer", "abnormal", "orbit"}
        for row in rep["subgroups"]
    )
