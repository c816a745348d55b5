"""
Random colorings and their stabilizers
======================================

Color the integers independently, color i with probability alpha_i and
otherwise give the point a fresh unique color. A permutation fixes the
coloring exactly when every nontrivial cycle is monochromatic in a named
color, which gives a product formula over cycle lengths.
"""

from fractions import Fraction

from nonfree import (
    ColoringModel,
    check_character_axioms,
    cycle_type_character,
    enumerate_subgroups,
    fixing_probability,
    mc_fixing_probability,
    named_group,
    young_pushforward,
    young_report,
)

halves = ColoringModel([Fraction(1, 2), Fraction(1, 2)])

# Exact probabilities from the product over cycle lengths: each k-cycle of
# a permutation contributes the k-th power sum of the alphas.
print("two colors, probability 1/2 each:")
for cycles in ([2], [2, 2], [3], [5]):
    p = fixing_probability(halves, cycles)
    print(f"  cycle lengths {cycles}: fixing probability {p}")
print()

# Monte Carlo agrees within a few standard errors and is reproducible.
est = mc_fixing_probability(halves, 4, [(0, 1), (2, 3)], trials=200000, seed=7)
print(
    f"Monte Carlo for the (2,2) pattern: {est.estimate:.5f} "
    f"+- {est.stderr:.5f} (exact 1/4)"
)
print()

# Pushing the random coloring of n points to the stabilizer subgroup gives
# a conjugation-invariant measure on the lattice of S_n.
s4 = named_group("S4")
lattice = enumerate_subgroups(s4)
nu = young_pushforward(halves, 4)
print("stabilizer masses on the S4 lattice (two colors, 4 points):")
for idx in nu.support:
    sub = lattice.subgroups[idx]
    print(f"  subgroup order {sub.order}: mass {nu.weights[idx]}")
print()

# Per cycle type: probability a permutation of that type fixes the
# coloring, probability it only preserves the color partition, and the
# gap coming from swapping equal-mass color blocks.
print("cycle type   fixes   preserves   block-swap gap")
for row in young_report(halves, 4):
    print(
        f"{str(row.cycle_type):12s} {str(row.fixes_probability):7s} "
        f"{str(row.preserves_probability):11s} "
        f"{str(row.block_swap_discrepancy)}"
    )
print()

# The fixing probability, read per conjugacy class, is a positive definite
# normalized class function on any permutation group.
s5 = named_group("S5")
phi = cycle_type_character(halves, s5)
rep = check_character_axioms(phi)
print(
    f"S5 fixing-probability character: values "
    f"{[str(v) for v in phi.rational_values()]}, axioms pass {rep.all_pass}"
)
