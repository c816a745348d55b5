from fractions import Fraction

import pytest

from nonfree.characters import check_character_axioms, decompose_character
from nonfree.errors import InputError, ResourceBoundError
from nonfree.registry import symmetric_group
from nonfree.thoma import (
    ColoringModel,
    coloring_stabilizer,
    cycle_type_character,
    fixing_probability,
    mc_fixing_probability,
    young_pushforward,
    young_report,
)

HALVES = ColoringModel([Fraction(1, 2), Fraction(1, 2)])
THIRDS = ColoringModel([Fraction(1, 3)] * 3)


def test_model_validation():
    with pytest.raises(InputError):
        ColoringModel([Fraction(3, 4), Fraction(1, 2)])
    with pytest.raises(InputError):
        ColoringModel([Fraction(-1, 4)])
    m = ColoringModel([Fraction(1, 4), Fraction(1, 2)])
    assert m.alpha == (Fraction(1, 2), Fraction(1, 4))  # sorted decreasing
    assert m.gamma == Fraction(1, 4)


def test_exact_values():
    assert fixing_probability(HALVES, [2]) == Fraction(1, 2)
    assert fixing_probability(HALVES, [2, 2]) == Fraction(1, 4)
    assert fixing_probability(THIRDS, [3]) == Fraction(1, 9)
    assert fixing_probability(HALVES, {2: 1, 1: 3}) == Fraction(1, 2)
    assert fixing_probability(HALVES, [5]) == Fraction(1, 16)
    # pure fresh colors never repeat: everything nontrivial dies
    fresh = ColoringModel([])
    assert fixing_probability(fresh, [2]) == 0
    assert fixing_probability(fresh, [1, 1]) == 1


def test_exact_matches_joint_enumeration_oracle():
    from oracles import fixing_probability_by_joint_enumeration

    cases = [
        (HALVES, 4, [(0, 1), (2, 3)]),
        (HALVES, 5, [(0, 1, 2, 3, 4)]),
        (THIRDS, 5, [(0, 1, 2), (3, 4)]),
        (ColoringModel([Fraction(1, 2), Fraction(1, 4)]), 4, [(0, 1, 2)]),
    ]
    for model, n, cycles in cases:
        expected = fixing_probability_by_joint_enumeration(model.alpha, n, cycles)
        lengths = [len(c) for c in cycles]
        lengths += [1] * (n - sum(lengths))
        assert fixing_probability(model, lengths) == expected


def test_mc_deterministic_and_close():
    a = mc_fixing_probability(HALVES, 4, [(0, 1), (2, 3)], trials=100000, seed=11)
    b = mc_fixing_probability(HALVES, 4, [(0, 1), (2, 3)], trials=100000, seed=11)
    assert a == b
    exact = float(fixing_probability(HALVES, [2, 2]))
    assert abs(a.estimate - exact) < 4 * a.stderr


def test_mc_input_validation():
    with pytest.raises(InputError):
        mc_fixing_probability(HALVES, 3, [(0, 5)], trials=10, seed=0)


def test_coloring_stabilizer():
    s4 = symmetric_group(4)
    H = coloring_stabilizer(s4, (0, 0, 1, 1))
    assert H.order == 4  # S2 x S2
    full = coloring_stabilizer(s4, (7, 7, 7, 7))
    assert full.order == 24
    trivial = coloring_stabilizer(s4, (0, 1, 2, 3))
    assert trivial.order == 1


def test_young_pushforward_two_points():
    nu = young_pushforward(HALVES, 2)
    by_order = {}
    for i, w in nu.weights.items():
        by_order[nu.lattice.subgroups[i].order] = (
            by_order.get(nu.lattice.subgroups[i].order, Fraction(0)) + w
        )
    assert by_order == {1: Fraction(1, 2), 2: Fraction(1, 2)}


def test_young_report_discrepancies():
    rows = young_report(HALVES, 4)
    by_type = {r.cycle_type: r for r in rows}
    assert by_type[(2, 2)].fixes_probability == Fraction(1, 4)
    assert by_type[(2, 2)].preserves_probability == Fraction(1, 2)
    assert by_type[(2, 2)].block_swap_discrepancy == Fraction(1, 4)
    assert by_type[(4,)].block_swap_discrepancy == Fraction(1, 8)
    assert by_type[(2, 1, 1)].block_swap_discrepancy == 0
    assert by_type[(3, 1)].block_swap_discrepancy == 0


def test_young_bound():
    with pytest.raises(ResourceBoundError):
        young_pushforward(HALVES, 7)


def test_character_on_s4_passes_axioms():
    s4 = symmetric_group(4)
    phi = cycle_type_character(HALVES, s4)
    rep = check_character_axioms(phi)
    assert rep.all_pass
    dec = decompose_character(phi)
    assert sum(dec.weights, Fraction(0)) == 1
