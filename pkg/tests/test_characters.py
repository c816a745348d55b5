from fractions import Fraction

import pytest

from nonfree.actions import MeasuredAction, pushforward_measure
from nonfree.characters import (
    Character,
    character_from_action,
    character_table,
    check_character_axioms,
    decompose_character,
    measure_character,
)
from nonfree.cyclotomic import Cyc, cyclotomic_polynomial
from nonfree.errors import NegativeWeight, TableBoundExceeded
from nonfree.lattice import enumerate_subgroups
from nonfree.perm import Subgroup
from nonfree.registry import named_group


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyc_arithmetic():
    z = Cyc.root(6)
    # zeta_6 satisfies z^2 - z + 1 = 0
    assert z * z - z + 1 == Cyc.rational(6, 0)
    assert (z * z.conjugate()).rational_value() == 1
    w = Cyc.root(3)
    assert w * w * w == Cyc.rational(3, 1)
    assert 1 + w + w * w == Cyc.rational(3, 0)
    assert not w.is_rational
    assert (w + w.conjugate()).rational_value() == -1
    assert w.galois(2) == w.conjugate()


def test_known_degree_vectors(groups):
    expected = {
        "C2": (1, 1),
        "C2xC2": (1, 1, 1, 1),
        "S3": (1, 1, 2),
        "D4": (1, 1, 1, 1, 2),
        "Q8": (1, 1, 1, 1, 2),
        "A4": (1, 1, 1, 3),
        "S4": (1, 1, 2, 3, 3),
        "D6": (1, 1, 1, 1, 2, 2),
        "S5": (1, 1, 4, 4, 5, 5, 6),
    }
    for name, degrees in expected.items():
        assert character_table(groups[name]).degrees == degrees, name


def test_s3_table_values(s3):
    table = character_table(s3)
    rows = {
        tuple(v.rational_value() for v in ch.values) for ch in table.characters
    }
    # classes ordered: identity, 3-cycles, transpositions
    assert rows == {(1, 1, 1), (1, 1, -1), (2, -1, 0)}


def test_a4_cubic_characters_are_conjugate(groups):
    table = character_table(groups["A4"])
    linear = [ch for ch, d in zip(table.characters, table.degrees) if d == 1]
    complexes = [ch for ch in linear if not ch.is_rational]
    assert len(complexes) == 2
    a, b = complexes
    assert all(
        va.conjugate() == vb for va, vb in zip(a.values, b.values)
    )


def test_table_bound():
    from nonfree.characters import TABLE_ORDER_BOUND

    class FakeGroup:
        order = TABLE_ORDER_BOUND + 1

    with pytest.raises(TableBoundExceeded):
        character_table(FakeGroup())


def test_natural_s3_decomposition(s3):
    phi = character_from_action(MeasuredAction.natural(s3))
    dec = decompose_character(phi)
    # degrees sorted (1, 1, 2) with the sign character first
    assert dec.weights == (Fraction(0), Fraction(1, 3), Fraction(2, 3))
    assert not dec.indecomposable


def test_regular_action_weights(groups):
    # the regular action decomposes with weight degree^2 / order on every
    # irreducible
    for name in ("C2", "S3", "D4", "Q8", "A4"):
        group = groups[name]
        trivial = Subgroup(group, (group.identity_index,))
        reg = MeasuredAction.coset_action(group, trivial)
        dec = decompose_character(character_from_action(reg))
        assert dec.weights == tuple(
            Fraction(d * d, group.order) for d in dec.degrees
        ), name


def test_measure_character_equals_action_character(s3):
    # membership mass of the stabilizer distribution = fixed mass, per class
    act = MeasuredAction.natural(s3)
    nu = pushforward_measure(act, enumerate_subgroups(s3))
    assert measure_character(nu).values == character_from_action(act).values


def test_axioms_reject_non_psd():
    c2 = named_group("C2")
    bad = Character(c2, (Fraction(1), Fraction(-2)))
    rep = check_character_axioms(bad)
    assert rep.normalized and rep.inverse_symmetric
    assert not rep.psd
    assert rep.elimination.failure.startswith("negative diagonal")
    with pytest.raises(NegativeWeight):
        decompose_character(bad)


def test_axioms_accept_action_characters(groups):
    for name in ("S3", "D4", "Q8", "A4"):
        phi = character_from_action(MeasuredAction.natural(groups[name]))
        rep = check_character_axioms(phi)
        assert rep.all_pass, name
        assert all(p > 0 for p in rep.elimination.pivots)


def test_psd_rank_equals_constituent_dimension(s4):
    phi = character_from_action(MeasuredAction.natural(s4))
    rep = check_character_axioms(phi)
    dec = decompose_character(phi)
    expected = sum(
        d * d for d, w in zip(dec.degrees, dec.weights) if w > 0
    )
    assert rep.elimination.rank == expected


def test_elimination_matches_minor_oracle(groups):
    from oracles import psd_by_principal_minors

    from nonfree.exactla import psd_report

    c2 = groups["C2"]
    cases = [
        [[Fraction(1), Fraction(1, 2)], [Fraction(1, 2), Fraction(1)]],
        [[Fraction(1), Fraction(-2)], [Fraction(-2), Fraction(1)]],
        [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]],
        [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]],
        [[Fraction(2), Fraction(1), Fraction(0)],
         [Fraction(1), Fraction(2), Fraction(1)],
         [Fraction(0), Fraction(1), Fraction(2)]],
    ]
    for M in cases:
        assert psd_report(M).psd == psd_by_principal_minors(M)
    phi = character_from_action(MeasuredAction.natural(c2))
    vals = phi.rational_values()
    M = [
        [vals[int(c2.class_of[c2.mul_table[c2.inv_table[g], h]])] for h in range(2)]
        for g in range(2)
    ]
    assert psd_report(M).psd == psd_by_principal_minors(M)
