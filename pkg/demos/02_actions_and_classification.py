"""
Classifying measured actions
============================

Build actions with invariant probability measures and classify them:
free, extremely nonfree (points have pairwise distinct stabilizers on a
set of full measure), totally nonfree (the fixed sets generate the full
algebra on the support).
"""

from nonfree import (
    MeasuredAction,
    Subgroup,
    classify_action,
    fixed_set,
    named_group,
    stabilizer,
)


def show(label, action):
    c = classify_action(action)
    print(
        f"{label:28s} free={c.free!s:5s} extremely={c.extremely_nonfree!s:5s} "
        f"totally={c.totally_nonfree!s:5s}"
    )


# The natural action of S3 on 3 points is totally nonfree: the three fixed
# sets of the transpositions cut the support into singletons.
s3 = named_group("S3")
natural = MeasuredAction.natural(s3)
show("S3 natural", natural)

# The regular action (cosets of the trivial subgroup) is free: only the
# identity fixes anything.
trivial = Subgroup(s3, (s3.identity_index,))
show("S3 regular", MeasuredAction.coset_action(s3, trivial))

# Klein four-group as two disjoint swaps on 4 points: points 0,1 share the
# stabilizer generated by (2 3) and points 2,3 share the one generated by
# (0 1), so the action is neither free nor extremely nonfree.
k4 = named_group("C2xC2")
show("C2xC2 natural", MeasuredAction.natural(k4))

# A doubled copy of the C2 swap has no fixed points at all.
c2 = named_group("C2")
free = MeasuredAction.from_generator_images(c2, 4, [[1, 0, 3, 2]])
show("C2 double swap", free)
print()

# Fixed sets and stabilizers of the natural S3 action. Each transposition
# fixes exactly one point, and each point is stabilized by one transposition.
print("fixed sets of S3 on 3 points:")
for g in range(s3.order):
    pts = fixed_set(natural, g)
    print(f"  element {s3.elements[g].images} fixes points {list(pts)}")
print()
print("point stabilizer orders:", [stabilizer(natural, x).order for x in range(3)])
