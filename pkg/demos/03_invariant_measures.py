"""
Invariant measures on the subgroup lattice
==========================================

A conjugation-invariant probability measure on the subgroup lattice is the
lattice-side picture of a measured action: push each point of an action to
its stabilizer. Ergodic measures are uniform on single conjugation orbits.
"""

from fractions import Fraction

from nonfree import (
    InvariantMeasure,
    MeasuredAction,
    en_measure_report,
    enumerate_subgroups,
    ergodic_decomposition,
    ergodic_lattice_measures,
    named_group,
    orbit_uniform,
    pushforward_measure,
    tnf_measure_report,
)

s4 = named_group("S4")
lattice = enumerate_subgroups(s4)

# Mass on self-normalizing subgroups decides a lot. Scan every ergodic
# measure of S4 and report the two structure tests.
print("ergodic measures of S4 (one per conjugation orbit):")
print("order  abnormal-mass  stabilizers-distinct  totally-nonfree")
for nu in ergodic_lattice_measures(s4):
    rep_en = en_measure_report(nu)
    rep_tnf = tnf_measure_report(nu)
    rep_subgroup = lattice.subgroups[nu.support[0]]
    print(
        f"{rep_subgroup.order:5d}  {str(rep_en.abnormal_mass):13s}  "
        f"{rep_en.stabilizers_distinct!s:20s}  {rep_tnf.totally_nonfree!s}"
    )
print()

# The order-3 orbit shows the converse of the mass criterion failing: zero
# mass on self-normalizing subgroups, yet the conjugation action on the
# orbit still has pairwise distinct stabilizers.
idx3 = next(i for i, s in enumerate(lattice.subgroups) if s.order == 3)
rep = en_measure_report(orbit_uniform(lattice, idx3))
print(
    f"order-3 orbit: abnormal mass {rep.abnormal_mass}, "
    f"stabilizers distinct {rep.stabilizers_distinct}, "
    f"counterexample to the converse: {rep.converse_counterexample}"
)
print()

# Any invariant measure splits into ergodic pieces, one per orbit it
# touches. The stabilizer pushforward of the natural S4 action sits on the
# orbit of point stabilizers; mixing in mass at the full group adds a
# second ergodic component.
nat = pushforward_measure(MeasuredAction.natural(s4))
full_index = next(
    i for i, s in enumerate(lattice.subgroups) if s.order == s4.order
)
mixed = InvariantMeasure(
    lattice,
    {i: Fraction(3, 4) * w for i, w in nat.weights.items()}
    | {full_index: Fraction(1, 4)},
)
print("ergodic decomposition of (3/4) natural pushforward + (1/4) full group:")
for weight, component in ergodic_decomposition(mixed):
    orders = sorted({lattice.subgroups[i].order for i in component.support})
    print(f"  weight {weight} on subgroups of order {orders}")
