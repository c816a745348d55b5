"""Conjugation-invariant measures on subgroup lattices.

All weights are exact rationals. A measure is invariant iff it is constant
on conjugation orbits, and ergodic iff it is uniform on a single orbit, so
the ergodic decomposition is the exact orbit-by-orbit split.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, NonInvariantMeasure
from .jsonio import format_fraction, parse_fraction
from .lattice import is_abnormal, membership_set


class InvariantMeasure:
    """A probability measure on the subgroups of a lattice.

    Weights are stored sparsely (nonzero atoms only). The public constructor
    validates nonnegativity, total mass exactly 1, and invariance; the
    ``unchecked`` path skips only the invariance check so that
    ``check_invariance`` can be demonstrated on broken inputs.
    """

    def __init__(self, lattice, weights, *, _skip_invariance=False):
        clean = {}
        total = Fraction(0)
        for idx, w in weights.items():
            w = Fraction(w)
            if w < 0:
                raise InputError(f"negative weight {w} at subgroup {idx}")
            if w:
                clean[int(idx)] = w
                total += w
        if total != 1:
            raise InputError(f"weights sum to {total}, expected exactly 1")
        self.lattice = lattice
        self.weights = clean
        if not _skip_invariance and not check_invariance(self):
            raise NonInvariantMeasure(
                "weights are not constant on conjugation orbits"
            )

    @classmethod
    def unchecked(cls, lattice, weights):
        return cls(lattice, weights, _skip_invariance=True)

    @property
    def support(self):
        return tuple(sorted(self.weights))

    def mass(self, index):
        return self.weights.get(int(index), Fraction(0))

    def lg_mass(self, g):
        """Mass of L_g = {H : g in H}."""
        members = membership_set(self.lattice, g)
        return sum(
            (w for i, w in self.weights.items() if i in members), Fraction(0)
        )

    @property
    def is_degenerate(self):
        """Single-atom supports are flagged rather than classified."""
        return len(self.weights) == 1

    def __eq__(self, other):
        if not isinstance(other, InvariantMeasure):
            return NotImplemented
        return (
            self.lattice.fingerprint() == other.lattice.fingerprint()
            and self.weights == other.weights
        )

    def __repr__(self):
        return f"InvariantMeasure(support size {len(self.weights)})"


def check_invariance(nu):
    """True iff nu(gHg^-1) = nu(H) for every generator g and subgroup H.

    Conjugation permutes subgroups, so checking the support atoms suffices:
    a mass mismatch in either direction shows up at some positive atom.
    """
    conj = nu.lattice.conj_table
    for t in range(conj.shape[0]):
        for i, w in nu.weights.items():
            if nu.mass(int(conj[t, i])) != w:
                return False
    return True


def orbit_uniform(lattice, index):
    """Uniform measure on the conjugation orbit of the given subgroup index."""
    orbit = lattice.orbits[lattice.orbit_of(int(index))]
    w = Fraction(1, len(orbit))
    return InvariantMeasure(lattice, {i: w for i in orbit})


def ergodic_decomposition(nu):
    """Split into orbit-uniform components: nu = sum w_i * uniform(O_i).

    Returns (weight, component) pairs ordered by orbit id. The split is
    exact and unique; reassembly is asserted.
    """
    lattice = nu.lattice
    by_orbit = {}
    for i, w in nu.weights.items():
        by_orbit.setdefault(lattice.orbit_of(i), Fraction(0))
        by_orbit[lattice.orbit_of(i)] += w
    out = []
    for oid in sorted(by_orbit):
        out.append((by_orbit[oid], orbit_uniform(lattice, lattice.orbits[oid][0])))
    # exact reassembly
    for i in range(len(lattice.subgroups)):
        total = sum((w * comp.mass(i) for w, comp in out), Fraction(0))
        assert total == nu.mass(i)
    return out


def normalization_pushforward(nu):
    """Push each atom's mass from H to its normalizer N(H)."""
    weights = {}
    for i, w in nu.weights.items():
        j = nu.lattice.normalizer_indices[i]
        weights[j] = weights.get(j, Fraction(0)) + w
    return InvariantMeasure(nu.lattice, weights)


@dataclass(frozen=True)
class ENMeasureReport:
    """Normalizer-based nonfreeness diagnostics of an invariant measure.

    ``agree`` records whether "all mass on self-normalizing subgroups" and
    "the normalizer map is injective on the support" give the same verdict;
    only the forward implication holds in general, and
    ``converse_counterexample`` marks non-degenerate measures where
    injectivity holds without full self-normalizing mass.
    """

    abnormal_mass: Fraction
    stabilizers_distinct: bool
    agree: bool
    degenerate: bool
    converse_counterexample: bool


def en_measure_report(nu):
    lattice = nu.lattice
    abnormal_mass = sum(
        (w for i, w in nu.weights.items() if is_abnormal(lattice, i)),
        Fraction(0),
    )
    support = nu.support
    normalizers = [lattice.normalizer_indices[i] for i in support]
    stabilizers_distinct = len(set(normalizers)) == len(normalizers)
    agree = (abnormal_mass == 1) == stabilizers_distinct
    degenerate = nu.is_degenerate
    return ENMeasureReport(
        abnormal_mass=abnormal_mass,
        stabilizers_distinct=stabilizers_distinct,
        agree=agree,
        degenerate=degenerate,
        converse_counterexample=(
            stabilizers_distinct and abnormal_mass != 1 and not degenerate
        ),
    )


@dataclass(frozen=True)
class TnfMeasureReport:
    """Total-nonfreeness verdict for a measure on its own lattice.

    ``totally_nonfree`` is the fixed-set-algebra classification of the
    conjugation action on the support. ``lg_separation`` is the membership
    criterion (positive-mass sets L_g separate support atoms); the two
    provably coincide when all mass sits on self-normalizing subgroups, and
    that equality is asserted.
    """

    totally_nonfree: bool
    lg_separation: bool
    abnormal_mass: Fraction
    degenerate: bool


def tnf_measure_report(nu):
    from .actions import adjoint_action, classify_action  # cycle break

    lattice = nu.lattice
    support = nu.support
    # membership criterion: signatures of support atoms under positive-mass L_g
    positive = [
        g for g in range(lattice.group.order) if nu.lg_mass(g) > 0
    ]
    pmask = 0
    for g in positive:
        pmask |= 1 << g
    signatures = [lattice.subgroups[i].mask & pmask for i in support]
    lg_separation = len(set(signatures)) == len(signatures)

    action = adjoint_action(lattice, support, weights=nu.weights)
    totally_nonfree = classify_action(action).totally_nonfree

    abnormal_mass = en_measure_report(nu).abnormal_mass
    if abnormal_mass == 1:
        # on a self-normalizing support the fixed subgroups of conjugation
        # by g are exactly the members of L_g, so the verdicts must match
        assert lg_separation == totally_nonfree
    return TnfMeasureReport(
        totally_nonfree=totally_nonfree,
        lg_separation=lg_separation,
        abnormal_mass=abnormal_mass,
        degenerate=nu.is_degenerate,
    )


def tnf_measure_test(nu):
    """Is the measure totally nonfree on its own lattice?"""
    return tnf_measure_report(nu).totally_nonfree


def reducely_en_test(nu):
    """True iff the normalization pushforward has full self-normalizing mass.

    Cross-checked against the direct criterion: all mass on subgroups whose
    normalizer is already self-normalizing (the tower stabilizes after one
    step).
    """
    push = normalization_pushforward(nu)
    via_pushforward = en_measure_report(push).abnormal_mass == 1
    norm = nu.lattice.normalizer_indices
    stable_mass = sum(
        (w for i, w in nu.weights.items() if norm[norm[i]] == norm[i]),
        Fraction(0),
    )
    assert via_pushforward == (stable_mass == 1)
    return via_pushforward


def measure_to_json(nu):
    return {
        "fingerprint": nu.lattice.fingerprint(),
        "weights": [
            {"subgroup_index": i, "weight": format_fraction(w)}
            for i, w in sorted(nu.weights.items())
        ],
    }


def measure_from_json(lattice, doc):
    if not isinstance(doc, dict) or "weights" not in doc:
        raise InputError('measure document needs a "weights" key')
    fp = doc.get("fingerprint")
    if fp is not None and fp != lattice.fingerprint():
        raise InputError(
            "measure fingerprint does not match the lattice's group"
        )
    weights = {}
    for entry in doc["weights"]:
        try:
            idx = int(entry["subgroup_index"])
            w = parse_fraction(entry["weight"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad weight entry {entry!r}") from exc
        if not 0 <= idx < len(lattice.subgroups):
            raise InputError(f"subgroup index {idx} out of range")
        weights[idx] = weights.get(idx, Fraction(0)) + w
    return InvariantMeasure(lattice, weights)
