"""Random colorings of points, their Young stabilizers, and cycle-type
characters of symmetric groups.

A coloring assigns each point either a named color i (probability alpha_i)
or a fresh color never seen twice (remaining probability). A permutation
fixes the coloring exactly when every cycle is monochromatic in a named
color, so the fixing probability factorizes over cycles of length >= 2 as
the power sums of alpha. The exact route, the stabilizer-distribution route
and a Monte Carlo route are all implemented so they can confront each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import sqrt

import numpy as np

from .errors import InputError, ResourceBoundError
from .lattice import enumerate_subgroups
from .measures import InvariantMeasure
from .perm import Subgroup
from .characters import Character
from .registry import symmetric_group

YOUNG_MAX_POINTS = 6
_MC_CHUNK = 1 << 17


@dataclass(frozen=True)
class ColoringModel:
    """Named color frequencies; the remainder is the fresh-color mass."""

    alpha: tuple

    def __init__(self, alpha):
        vals = sorted((Fraction(a) for a in alpha), reverse=True)
        if any(a < 0 for a in vals):
            raise InputError("color frequencies must be nonnegative")
        if sum(vals, Fraction(0)) > 1:
            raise InputError("color frequencies must sum to at most 1")
        object.__setattr__(self, "alpha", tuple(vals))

    @property
    def gamma(self):
        return 1 - sum(self.alpha, Fraction(0))

    def power_sum(self, k):
        return sum((a**k for a in self.alpha), Fraction(0))


def _cycle_counts(cycle_type):
    """Normalize a {length: multiplicity} dict or a list of lengths."""
    if isinstance(cycle_type, dict):
        counts = dict(cycle_type)
    else:
        counts = {}
        for k in cycle_type:
            counts[k] = counts.get(k, 0) + 1
    if any(k < 1 or m < 0 for k, m in counts.items()):
        raise InputError("cycle lengths and multiplicities must be positive")
    return counts


def fixing_probability(model, cycle_type):
    """Exact probability that a permutation of this cycle type fixes a
    random coloring: the product of power sums over cycles of length >= 2.
    """
    out = Fraction(1)
    for k, mult in _cycle_counts(cycle_type).items():
        if k >= 2:
            out *= model.power_sum(k) ** mult
    return out


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    stderr: float
    trials: int
    seed: int


def mc_fixing_probability(model, n, cycles, trials, seed):
    """Monte Carlo estimate of the fixing probability.

    ``cycles`` is an iterable of point tuples (fixed points may be
    omitted). Fresh colors are distinct by construction, so a cycle of
    length >= 2 survives only if all its points drew the same named color.
    """
    cycles = [tuple(c) for c in cycles if len(c) >= 2]
    for c in cycles:
        if any(not 0 <= x < n for x in c):
            raise InputError("cycle entry out of range")
    edges = np.cumsum([float(a) for a in model.alpha])
    r = len(model.alpha)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    hits = 0
    done = 0
    while done < trials:
        batch = min(_MC_CHUNK, trials - done)
        u = rng.random((batch, n))
        colors = np.searchsorted(edges, u).astype(np.int16)
        ok = np.ones(batch, dtype=bool)
        for c in cycles:
            base = colors[:, c[0]]
            ok &= base < r
            for pt in c[1:]:
                ok &= colors[:, pt] == base
        hits += int(ok.sum())
        done += batch
    p = hits / trials
    return McEstimate(
        estimate=p,
        stderr=sqrt(p * (1 - p) / trials),
        trials=trials,
        seed=seed,
    )


def coloring_stabilizer(group, coloring):
    """Subgroup of a permutation group preserving a coloring pointwise."""
    if len(coloring) != group.degree:
        raise InputError("coloring length must equal the degree")
    act = group._images
    members = [
        g
        for g in range(group.order)
        if all(coloring[act[g, x]] == coloring[x] for x in range(group.degree))
    ]
    return Subgroup(group, tuple(members))


def young_pushforward(model, n):
    """Exact stabilizer distribution of a random coloring of n points.

    Enumerates all named/fresh assignment patterns; fresh points are
    automatically in singleton color classes. Bounded at n <= 6 because the
    full subgroup lattice of the symmetric group is needed.
    """
    if n > YOUNG_MAX_POINTS:
        raise ResourceBoundError(
            f"stabilizer distribution limited to {YOUNG_MAX_POINTS} points"
        )
    group = symmetric_group(n)
    lattice = enumerate_subgroups(group)
    r = len(model.alpha)
    gamma = model.gamma
    weights = {}
    for pattern in product(range(r + 1), repeat=n):
        prob = Fraction(1)
        for c in pattern:
            prob *= model.alpha[c] if c < r else gamma
        if prob == 0:
            continue
        # fresh points (pattern value r) get pairwise distinct colors
        coloring = tuple(
            (0, pattern[x]) if pattern[x] < r else (1, x) for x in range(n)
        )
        H = coloring_stabilizer(group, coloring)
        idx = lattice.index_of(H)
        weights[idx] = weights.get(idx, Fraction(0)) + prob
    return InvariantMeasure(lattice, weights)


@dataclass(frozen=True)
class YoungClassRow:
    cycle_type: tuple
    fixes_probability: Fraction
    membership_mass: Fraction
    preserves_probability: Fraction
    block_swap_discrepancy: Fraction


def young_report(model, n):
    """Per-class comparison of three coloring probabilities.

    For each cycle type: the exact fixing probability, the stabilizer
    membership mass (must agree; asserted), and the probability that the
    permutation merely preserves the color partition, possibly swapping
    same-size classes. The last exceeds the first exactly on classes that
    admit block swaps.
    """
    if n > YOUNG_MAX_POINTS:
        raise ResourceBoundError(
            f"stabilizer distribution limited to {YOUNG_MAX_POINTS} points"
        )
    group = symmetric_group(n)
    nu = young_pushforward(model, n)
    lattice = nu.lattice
    r = len(model.alpha)
    gamma = model.gamma

    reps = [cls[0] for cls in group.classes]
    fixes = [Fraction(0)] * len(reps)
    preserves = [Fraction(0)] * len(reps)
    act = group._images
    for pattern in product(range(r + 1), repeat=n):
        prob = Fraction(1)
        for c in pattern:
            prob *= model.alpha[c] if c < r else gamma
        if prob == 0:
            continue
        coloring = tuple(
            (0, pattern[x]) if pattern[x] < r else (1, x) for x in range(n)
        )
        classes = {}
        for x in range(n):
            classes.setdefault(coloring[x], set()).add(x)
        partition = {frozenset(v) for v in classes.values()}
        for j, g in enumerate(reps):
            if all(coloring[act[g, x]] == coloring[x] for x in range(n)):
                fixes[j] += prob
            if {frozenset(act[g, x] for x in block) for block in partition} == partition:
                preserves[j] += prob

    rows = []
    for j, g in enumerate(reps):
        ct = group.elements[g].cycle_type()
        member_mass = sum(
            (w for i, w in nu.weights.items() if g in lattice.subgroups[i]),
            Fraction(0),
        )
        assert member_mass == fixes[j]
        assert fixes[j] == fixing_probability(model, ct)
        lengths = tuple(
            sorted((k for k, m in ct.items() for _ in range(m)), reverse=True)
        )
        rows.append(
            YoungClassRow(
                cycle_type=lengths,
                fixes_probability=fixes[j],
                membership_mass=member_mass,
                preserves_probability=preserves[j],
                block_swap_discrepancy=preserves[j] - fixes[j],
            )
        )
    return rows


def cycle_type_character(model, group):
    """The character g -> fixing probability of g's cycle type.

    Works for any permutation group; restriction of a positive definite
    function stays positive definite, so the axioms hold exactly.
    """
    values = []
    for cls in group.classes:
        perm = group.elements[cls[0]]
        values.append(fixing_probability(model, perm.cycle_type()))
    return Character(group, tuple(values))
