from fractions import Fraction

import numpy as np
import pytest

from nonfree.actions import (
    MeasuredAction,
    action_from_json,
    adjoint_action,
    algebra_fixed_sets,
    algebra_stabilizers,
    classify_action,
    fixed_mass,
    fixed_set,
    iso_test,
    koopman_rank,
    pushforward_measure,
    stabilizer,
)
from nonfree.errors import (
    InputError,
    IsoSearchBoundExceeded,
    NonInvariantMeasure,
    NotExtremelyNonfree,
)
from nonfree.lattice import enumerate_subgroups
from nonfree.registry import named_group, transitive_actions


def test_table_law_checked(s3):
    act = MeasuredAction.natural(s3).act.copy()
    act[3] = act[3][[1, 0, 2]]  # corrupt one row, keep it a permutation
    with pytest.raises(InputError):
        MeasuredAction(s3, [Fraction(1, 3)] * 3, act)


def test_measure_invariance_checked(s3):
    with pytest.raises(NonInvariantMeasure):
        MeasuredAction.natural(
            s3, mu=[Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]
        )


def test_measure_total_checked(s3):
    with pytest.raises(InputError):
        MeasuredAction.natural(s3, mu=[Fraction(1, 3)] * 2 + [Fraction(1, 6)])


def test_fixed_sets_and_stabilizers(s3):
    act = MeasuredAction.natural(s3)
    t = s3._index[(1, 0, 2)]  # the transposition swapping 0 and 1
    assert fixed_set(act, t) == (2,)
    assert fixed_mass(act, t) == Fraction(1, 3)
    H = stabilizer(act, 2)
    assert H.order == 2 and t in H


def test_classification_examples(groups):
    natural = classify_action(MeasuredAction.natural(groups["S3"]))
    assert (natural.free, natural.extremely_nonfree, natural.totally_nonfree) == (
        False,
        True,
        True,
    )
    k4 = classify_action(MeasuredAction.natural(groups["C2xC2"]))
    assert (k4.free, k4.extremely_nonfree, k4.totally_nonfree) == (
        False,
        False,
        False,
    )
    free = classify_action(
        MeasuredAction.from_generator_images(
            named_group("C2"), 4, [[1, 0, 3, 2]]
        )
    )
    assert free.free and not free.totally_nonfree


def test_partitions_coincide_on_support(groups):
    # finite shadow of the algebra comparison: equal-stabilizer blocks and
    # fixed-set-algebra atoms must agree for every registry action
    for name, group in groups.items():
        for _, act in transitive_actions(group, max_points=8):
            assert algebra_fixed_sets(act).blocks == algebra_stabilizers(act).blocks
            assert classify_action(act).partitions_agree


def test_pushforward_values(s3):
    lat = enumerate_subgroups(s3)
    nu = pushforward_measure(MeasuredAction.natural(s3), lat)
    expected = {
        i: Fraction(1, 3)
        for i, s in enumerate(lat.subgroups)
        if s.order == 2
    }
    assert dict(nu.weights) == expected


def test_adjoint_action_requires_closure(s4):
    lat = enumerate_subgroups(s4)
    idx = next(i for i, s in enumerate(lat.subgroups) if s.order == 3)
    with pytest.raises(InputError):
        adjoint_action(lat, [idx])  # singleton from a 4-element orbit


def test_iso_natural_vs_adjoint(s3):
    lat = enumerate_subgroups(s3)
    act = MeasuredAction.natural(s3)
    nu = pushforward_measure(act, lat)
    adj = adjoint_action(lat, nu.support, weights=nu.weights)
    rep = iso_test(act, adj)
    assert rep.nu_equal and rep.brute_iso and rep.agree


def test_iso_brute_matches_enumeration_oracle(s4):
    from oracles import equivariant_bijection_by_enumeration

    acts = [a for _, a in transitive_actions(s4, max_points=6)]
    en_acts = [a for a in acts if classify_action(a).extremely_nonfree]
    assert len(en_acts) >= 2
    for a in en_acts:
        for b in en_acts:
            rep = iso_test(a, b)
            assert rep.brute_iso == equivariant_bijection_by_enumeration(a, b)
            assert rep.agree


def test_iso_requires_extreme_nonfreeness(groups):
    k4 = MeasuredAction.natural(groups["C2xC2"])
    with pytest.raises(NotExtremelyNonfree):
        iso_test(k4, k4)


def test_iso_search_bound(s5):
    lat = enumerate_subgroups(s5)
    orbit15 = next(o for o in lat.orbits if len(o) == 15)
    act = adjoint_action(lat, orbit15)
    assert classify_action(act).extremely_nonfree
    with pytest.raises(IsoSearchBoundExceeded):
        iso_test(act, act)


def test_koopman(groups):
    two_transitive = koopman_rank(MeasuredAction.natural(groups["S3"]))
    assert two_transitive == koopman_rank(MeasuredAction.natural(groups["S4"]))
    assert two_transitive.applicable and two_transitive.rank == 2
    assert two_transitive.irreducible_complement
    d4 = koopman_rank(MeasuredAction.natural(groups["D4"]))
    assert d4.rank == 3 and not d4.irreducible_complement
    intransitive = koopman_rank(MeasuredAction.natural(groups["C2xC2"]))
    assert not intransitive.applicable


def test_action_from_json(s3):
    act = action_from_json(s3, {"points": 3})
    assert np.array_equal(act.act, MeasuredAction.natural(s3).act)
    doc = {
        "points": 4,
        "generator_images": [[1, 0, 2, 3], [1, 2, 0, 3]],
        "measure": ["1/6", "1/6", "1/6", "1/2"],
    }
    act4 = action_from_json(s3, doc)
    assert act4.mu[3] == Fraction(1, 2)
    with pytest.raises(InputError):
        action_from_json(s3, {"points": 4})
    with pytest.raises(InputError):
        action_from_json(s3, {})


def test_coset_action_points(s4):
    lat = enumerate_subgroups(s4)
    idx = next(i for i, s in enumerate(lat.subgroups) if s.order == 6)
    act = MeasuredAction.coset_action(s4, lat.subgroups[idx])
    assert act.n_points == 4
    assert classify_action(act).totally_nonfree
