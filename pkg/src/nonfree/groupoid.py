"""The orbit groupoid of a measured action and its left regular operators.

Points carry their measure; the groupoid lives on pairs (x, y) with y in
the orbit of x, both of positive measure. Functions on pairs form a
finite-dimensional inner product space weighted by the source measure, and
group elements act by left and right translation. The diagonal indicator is
the distinguished vector; its matrix coefficients recover the fixed-set
masses exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .actions import algebra_fixed_sets, classify_action, fixed_mass, fixed_set
from .errors import GroupoidBoundExceeded
from .exactla import SpanTracker

GROUPOID_PAIR_BOUND = 4096


class GroupoidSpace:
    """Pairs of the orbit equivalence relation with translation operators."""

    def __init__(self, action, pair_bound=GROUPOID_PAIR_BOUND):
        support = action.support
        in_support = set(support)
        orbit_of = {}
        for x in support:
            orbit_of[x] = {
                int(y) for y in action.act[:, x].tolist() if int(y) in in_support
            }
        pairs = []
        for x in support:
            for y in sorted(orbit_of[x]):
                pairs.append((x, y))
        if len(pairs) > pair_bound:
            raise GroupoidBoundExceeded(
                f"{len(pairs)} pairs exceeds the bound {pair_bound}"
            )
        self.action = action
        self.group = action.group
        self.pairs = tuple(pairs)
        self.n_pairs = len(pairs)
        self._index = {pq: i for i, pq in enumerate(pairs)}
        self.diagonal_indices = tuple(
            i for i, (x, y) in enumerate(pairs) if x == y
        )

    def pair_index(self, x, y):
        return self._index[(x, y)]

    def left_perm(self, g):
        """Index map of left translation: basis pair (x, y) -> (g.x, y)."""
        act = self.action.act[int(g)]
        return np.array(
            [self._index[(int(act[x]), y)] for x, y in self.pairs], dtype=np.int32
        )

    def right_perm(self, g):
        """Index map of right translation: basis pair (x, y) -> (x, g.y)."""
        act = self.action.act[int(g)]
        return np.array(
            [self._index[(x, int(act[y]))] for x, y in self.pairs], dtype=np.int32
        )

    def left_matrix(self, g):
        """Dense 0/1 matrix of left translation in the pair basis."""
        M = np.zeros((self.n_pairs, self.n_pairs), dtype=np.int64)
        for src, dst in enumerate(self.left_perm(g)):
            M[dst, src] = 1
        return M

    def diagonal_vector(self):
        v = [Fraction(0)] * self.n_pairs
        for i in self.diagonal_indices:
            v[i] = Fraction(1)
        return v

    def inner(self, f, h):
        """Source-weighted inner product, exact."""
        mu = self.action.mu
        acc = Fraction(0)
        for i, (x, _) in enumerate(self.pairs):
            if f[i] and h[i]:
                acc += mu[x] * Fraction(f[i]) * Fraction(h[i])
        return acc


def matrix_coefficient(groupoid, g):
    """Inner product of the g-translated diagonal with the diagonal.

    Equals the measure of the fixed-point set of g; the identity is asserted
    so the two computation routes check each other.
    """
    delta = groupoid.diagonal_vector()
    perm = groupoid.left_perm(g)
    shifted = [Fraction(0)] * groupoid.n_pairs
    for src, dst in enumerate(perm):
        shifted[dst] = delta[src]
    val = groupoid.inner(shifted, delta)
    assert val == fixed_mass(groupoid.action, g)
    return val


@dataclass(frozen=True)
class SpanReport:
    """Dimensions attached to the diagonal restrictions of translations.

    ``indicator_span_dim`` is the linear span of the fixed-set indicators on
    the support, ``algebra_dim`` the dimension of the set algebra they
    generate, ``diagonal_dim`` the full diagonal dimension. The action is
    totally nonfree exactly when the algebra is everything.
    """

    indicator_span_dim: int
    algebra_dim: int
    diagonal_dim: int
    totally_nonfree: bool


def diagonal_span_report(action):
    support = list(action.support)
    pos = {x: i for i, x in enumerate(support)}
    tracker = SpanTracker(len(support))
    for g in range(action.group.order):
        vec = [Fraction(0)] * len(support)
        for x in fixed_set(action, g):
            if x in pos:
                vec[pos[x]] = Fraction(1)
        tracker.add(vec)
    algebra_dim = len(algebra_fixed_sets(action).blocks)
    tnf = algebra_dim == len(support)
    assert tnf == classify_action(action).totally_nonfree
    return SpanReport(
        indicator_span_dim=tracker.rank,
        algebra_dim=algebra_dim,
        diagonal_dim=len(support),
        totally_nonfree=tnf,
    )


def cyclic_dimension(groupoid, with_multiplicators=False):
    """Dimension of the subspace generated from the diagonal indicator.

    Closure under all left translations; with multiplicators also under
    multiplication by source-coordinate indicators. Without multiplicators
    the translated diagonals alone are usually far from spanning.
    """
    n = groupoid.n_pairs
    perms = [groupoid.left_perm(g) for g in range(groupoid.group.order)]
    tracker = SpanTracker(n)
    frontier = []

    def push(vec):
        if tracker.add(vec):
            frontier.append(tuple(vec))

    push(groupoid.diagonal_vector())
    while frontier:
        vec = frontier.pop()
        for perm in perms:
            moved = [Fraction(0)] * n
            for src, dst in enumerate(perm):
                if vec[src]:
                    moved[dst] = vec[src]
            push(moved)
        if with_multiplicators:
            sources = {}
            for i, (x, _) in enumerate(groupoid.pairs):
                sources.setdefault(x, []).append(i)
            for idxs in sources.values():
                cut = [Fraction(0)] * n
                any_nonzero = False
                for i in idxs:
                    if vec[i]:
                        cut[i] = vec[i]
                        any_nonzero = True
                if any_nonzero:
                    push(cut)
    return tracker.rank
