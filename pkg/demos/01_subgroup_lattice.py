"""
Subgroup lattices, conjugation orbits, normalizers
==================================================

Enumerate every subgroup of a small permutation group, group them into
conjugacy orbits, and walk the normalizer towers.
"""

from nonfree import enumerate_subgroups, named_group, normalization_tower

# S4 acting on 4 points. Elements are indexed 0..23 in a fixed sorted order,
# so every subgroup is just a tuple of element indices.
group = named_group("S4")
lattice = enumerate_subgroups(group)

print(f"{group.name}: order {group.order}, degree {group.degree}")
print(f"subgroups: {len(lattice.subgroups)}")
print(f"conjugacy orbits of subgroups: {len(lattice.orbits)}")
print()

# One line per orbit: order, orbit size, normalizer order, and whether the
# subgroup is self-normalizing (orbit size * normalizer order = group order).
print("order  orbit  normalizer  self-normalizing")
for orbit in lattice.orbits:
    rep = lattice.subgroups[orbit[0]]
    n = lattice.subgroups[lattice.normalizer_indices[orbit[0]]]
    flag = "yes" if n.order == rep.order else ""
    print(f"{rep.order:5d}  {len(orbit):5d}  {n.order:10d}  {flag}")
print()

# Iterating H -> N(H) always stabilizes. For a Sylow 2-subgroup of S4 the
# tower ends immediately; for a 2-cycle it climbs twice.
two_cycle = next(
    i for i, s in enumerate(lattice.subgroups) if s.order == 2 and i in
    {o[0] for o in lattice.orbits}
)
tower = normalization_tower(lattice, two_cycle)
print("normalizer tower over an order-2 subgroup (orders):")
print("  " + " -> ".join(str(s.order) for s in tower))
