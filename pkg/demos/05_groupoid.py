"""
The pair groupoid of an action
==============================

Pairs (x, y) with y in the orbit of x carry two commuting translation
actions. Matrix coefficients of the left translation against the diagonal
indicator recover fixed-set masses, and the dimension of the algebra
generated by diagonal translates detects total nonfreeness.
"""

from nonfree import (
    GroupoidSpace,
    MeasuredAction,
    cyclic_dimension,
    diagonal_span_report,
    fixed_mass,
    matrix_coefficient,
    named_group,
)

s3 = named_group("S3")
natural = MeasuredAction.natural(s3)
space = GroupoidSpace(natural)
print(f"pair space of the natural S3 action: {len(space.pairs)} pairs")

# <L_g 1_diag, 1_diag> equals the measure of the fixed set of g, exactly.
print("matrix coefficients vs fixed-set masses:")
for g in (0, 1, 3):
    coeff = matrix_coefficient(space, g)
    print(
        f"  element {s3.elements[g].images}: coefficient {coeff}, "
        f"fixed mass {fixed_mass(natural, g)}"
    )
print()

# Diagonal span dimensions. For the totally nonfree S3 action the span of
# diagonal translates already has the dimension of the full diagonal; the
# Klein four-group action stalls at dimension 2 of 4.
for name in ("S3", "C2xC2"):
    act = MeasuredAction.natural(named_group(name))
    rep = diagonal_span_report(act)
    print(
        f"{name:6s} span {rep.indicator_span_dim}, algebra {rep.algebra_dim}, "
        f"diagonal {rep.diagonal_dim}, totally nonfree {rep.totally_nonfree}"
    )
print()

# Cyclic dimension of the diagonal indicator: translates alone versus
# translates plus multiplication by source indicators. A C2 action with
# orbits of sizes 2, 1, 2 separates the two notions.
c2 = named_group("C2")
act = MeasuredAction.from_generator_images(c2, 5, [[1, 0, 2, 4, 3]])
space = GroupoidSpace(act)
print(f"five-point C2 action: {len(space.pairs)} pairs")
print("cyclic dimension, translates only:  ", cyclic_dimension(space))
print(
    "cyclic dimension, with multiplicators:",
    cyclic_dimension(space, with_multiplicators=True),
)
