"""Measured actions of finite groups on finite point sets.

An action is stored as the full table act[g, x] = g.x over element indices;
construction verifies the group law on every pair, exact total mass 1, and
invariance of the measure. "mod 0" semantics strip measure-zero points:
partitions, classifications and pushforwards only see the support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    InputError,
    IsoSearchBoundExceeded,
    NonInvariantMeasure,
    NotExtremelyNonfree,
)
from .jsonio import parse_fraction
from .lattice import enumerate_subgroups
from .measures import InvariantMeasure
from .perm import Subgroup

ISO_SEARCH_BOUND = 10


class MeasuredAction:
    """A finite group acting on weighted points.

    ``mu`` is a tuple of exact rationals summing to 1; ``act`` is the
    (order, points) table of the action; ``labels`` optionally carries
    human-readable point names (e.g. subgroup indices for adjoint actions).
    """

    def __init__(self, group, mu, act, labels=None):
        act = np.asarray(act, dtype=np.int32)
        if act.shape != (group.order, act.shape[1] if act.ndim == 2 else -1):
            raise InputError("action table must have one row per group element")
        n = act.shape[1]
        if n < 1:
            raise InputError("action needs at least one point")
        mu = tuple(Fraction(m) for m in mu)
        if len(mu) != n:
            raise InputError("measure length does not match point count")
        if any(m < 0 for m in mu):
            raise InputError("measure weights must be nonnegative")
        if sum(mu) != 1:
            raise InputError(f"measure sums to {sum(mu)}, expected exactly 1")

        idx = np.arange(n)
        for g in range(group.order):
            if not np.array_equal(np.sort(act[g]), idx):
                raise InputError(f"row {g} of the action table is not a permutation")
        if not np.array_equal(act[group.identity_index], idx):
            raise InputError("identity must act trivially")
        T = group.mul_table
        for g in range(group.order):
            # act[g*h] == act[g] after act[h], checked for every h at once
            if not np.array_equal(act[T[g]], act[g][act]):
                raise InputError("generator images do not respect the group law")

        for g in group.generator_indices:
            for x in range(n):
                if mu[int(act[g, x])] != mu[x]:
                    raise NonInvariantMeasure(
                        f"measure not invariant: point {x} under generator {g}"
                    )

        self.group = group
        self.mu = mu
        self.act = act
        self.n_points = n
        self.labels = tuple(labels) if labels is not None else None
        self._support = tuple(x for x in range(n) if mu[x] > 0)

    @property
    def support(self):
        return self._support

    def apply(self, g, x):
        return int(self.act[int(g), int(x)])

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_generator_images(cls, group, n_points, images, mu=None, labels=None):
        """Extend per-generator point maps multiplicatively to the whole group."""
        images = [np.asarray(im, dtype=np.int32) for im in images]
        if len(images) != len(group.generators):
            raise InputError(
                f"expected {len(group.generators)} generator images, got {len(images)}"
            )
        for im in images:
            if im.shape != (n_points,) or not np.array_equal(
                np.sort(im), np.arange(n_points)
            ):
                raise InputError("each generator image must permute the points")
        if mu is None:
            mu = [Fraction(1, n_points)] * n_points
        T = group.mul_table
        act = np.full((group.order, n_points), -1, dtype=np.int32)
        act[group.identity_index] = np.arange(n_points)
        frontier = [group.identity_index]
        while frontier:
            new = []
            for x in frontier:
                for im, g in zip(images, group.generator_indices):
                    y = int(T[g, x])
                    if act[y, 0] == -1:
                        act[y] = im[act[x]]
                        new.append(y)
            frontier = new
        assert not (act < 0).any()
        return cls(group, mu, act, labels=labels)

    @classmethod
    def natural(cls, group, mu=None):
        """The group acting on its own 0..degree-1 points."""
        if mu is None:
            mu = [Fraction(1, group.degree)] * group.degree
        return cls(group, mu, group._images.copy())

    @classmethod
    def coset_action(cls, group, subgroup):
        """Left translation on the cosets of a subgroup, uniform measure.

        Cosets are numbered by first appearance in element order, so point
        ids are deterministic.
        """
        T = group.mul_table
        mem = np.array(subgroup.members, dtype=np.int32)
        coset_of = np.full(group.order, -1, dtype=np.int32)
        reps = []
        for g in range(group.order):
            if coset_of[g] < 0:
                coset_of[T[g, mem]] = len(reps)
                reps.append(g)
        k = len(reps)
        act = np.empty((group.order, k), dtype=np.int32)
        for g in range(group.order):
            act[g] = coset_of[T[g, reps]]
        mu = [Fraction(1, k)] * k
        return cls(group, mu, act, labels=tuple(reps))


def adjoint_action(lattice, indices=None, weights=None):
    """Conjugation acting on a conjugation-closed set of subgroup indices.

    ``weights`` maps subgroup index -> mass (default: uniform). Point labels
    are the subgroup indices.
    """
    group = lattice.group
    if indices is None:
        indices = range(len(lattice.subgroups))
    indices = tuple(sorted(int(i) for i in indices))
    point_of = {s: p for p, s in enumerate(indices)}
    images = []
    for t in range(len(group.generator_indices)):
        row = []
        for s in indices:
            c = int(lattice.conj_table[t, s])
            if c not in point_of:
                raise InputError("subgroup set is not closed under conjugation")
            row.append(point_of[c])
        images.append(row)
    if weights is None:
        mu = [Fraction(1, len(indices))] * len(indices)
    else:
        mu = [Fraction(weights.get(s, 0)) for s in indices]
    return MeasuredAction.from_generator_images(
        group, len(indices), images, mu=mu, labels=indices
    )


def action_from_json(group, doc):
    """Build from {"points": n, "measure": [...], "generator_images": [...]}.

    Omitted measure means uniform; omitted generator_images means the natural
    action (points must equal the degree).
    """
    if not isinstance(doc, dict):
        raise InputError("action document must be an object")
    try:
        n = int(doc["points"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError('action document needs an integer "points"') from exc
    mu = None
    if "measure" in doc:
        mu = [parse_fraction(v) for v in doc["measure"]]
    if "generator_images" in doc:
        return MeasuredAction.from_generator_images(
            group, n, doc["generator_images"], mu=mu
        )
    if n != group.degree:
        raise InputError(
            "without generator_images, points must equal the group degree"
        )
    return MeasuredAction.natural(group, mu=mu)


# -- fixed sets, stabilizers, partitions --------------------------------------


def fixed_set(action, g):
    """Points fixed by the group element with index g."""
    row = action.act[int(g)]
    return tuple(int(x) for x in np.nonzero(row == np.arange(action.n_points))[0])


def fixed_mass(action, g):
    """Exact measure of the fixed-point set of g."""
    return sum((action.mu[x] for x in fixed_set(action, g)), Fraction(0))


def stabilizer(action, x):
    """The stabilizer subgroup of a point."""
    x = int(x)
    col = action.act[:, x]
    members = tuple(int(g) for g in np.nonzero(col == x)[0])
    return Subgroup(action.group, members)


def _stabilizer_masks(action):
    out = {}
    for x in action.support:
        col = action.act[:, x]
        mask = 0
        for g in np.nonzero(col == x)[0]:
            mask |= 1 << int(g)
        out[x] = mask
    return out


@dataclass(frozen=True)
class PartitionAlgebra:
    """A partition of the positive-measure points, in canonical block order."""

    blocks: tuple

    @staticmethod
    def from_blocks(blocks):
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return PartitionAlgebra(canon)

    def is_discrete(self):
        return all(len(b) == 1 for b in self.blocks)

    def refines(self, other):
        """Every block of self lies inside some block of other."""
        lookup = {}
        for b in other.blocks:
            for x in b:
                lookup[x] = b
        return all(
            all(lookup.get(x) == lookup.get(block[0]) for x in block)
            for block in self.blocks
        )


def algebra_fixed_sets(action):
    """Atoms of the set algebra generated by the fixed-point sets, mod 0.

    Computed by iterated refinement: each fixed set splits every block it
    meets properly.
    """
    support = list(action.support)
    blocks = [support]
    for g in range(action.group.order):
        fixed = set(fixed_set(action, g))
        new = []
        for b in blocks:
            inside = [x for x in b if x in fixed]
            outside = [x for x in b if x not in fixed]
            if inside and outside:
                new.append(inside)
                new.append(outside)
            else:
                new.append(b)
        blocks = new
    return PartitionAlgebra.from_blocks(blocks)


def algebra_stabilizers(action):
    """Partition of the support by equal stabilizer subgroup."""
    masks = _stabilizer_masks(action)
    groups = {}
    for x in action.support:
        groups.setdefault(masks[x], []).append(x)
    return PartitionAlgebra.from_blocks(groups.values())


@dataclass(frozen=True)
class ActionClassification:
    free: bool
    extremely_nonfree: bool
    totally_nonfree: bool
    partitions_agree: bool


def classify_action(action):
    """Freeness trichotomy plus the fixed-set/stabilizer algebra comparison.

    ``partitions_agree`` records that the stabilizer partition refines
    the fixed-set partition and (finite case) that the two coincide.
    """
    support = set(action.support)
    free = True
    for g in range(action.group.order):
        if g == action.group.identity_index:
            continue
        if any(x in support for x in fixed_set(action, g)):
            free = False
            break
    ag = algebra_fixed_sets(action)
    st = algebra_stabilizers(action)
    partitions_agree = st.refines(ag) and st.blocks == ag.blocks
    return ActionClassification(
        free=free,
        extremely_nonfree=st.is_discrete(),
        totally_nonfree=ag.is_discrete(),
        partitions_agree=partitions_agree,
    )


def pushforward_measure(action, lattice=None):
    """Distribution of the stabilizer map: nu(H) = mu{x : G_x = H}.

    Asserts the membership identity mu(fixed(g)) = sum of nu over subgroups
    containing g, for every g.
    """
    if lattice is None:
        lattice = enumerate_subgroups(action.group)
    masks = _stabilizer_masks(action)
    weights = {}
    for x in action.support:
        idx = lattice.index_of(masks[x])
        weights[idx] = weights.get(idx, Fraction(0)) + action.mu[x]
    nu = InvariantMeasure(lattice, weights)
    for g in range(action.group.order):
        contained = sum(
            (w for i, w in nu.weights.items() if g in lattice.subgroups[i]),
            Fraction(0),
        )
        assert contained == fixed_mass(action, g)
    return nu


# -- isomorphism ---------------------------------------------------------------


def _support_orbits(action):
    support = list(action.support)
    seen = set()
    orbits = []
    for x in support:
        if x in seen:
            continue
        orbit = sorted(int(y) for y in set(action.act[:, x].tolist()))
        orbit = [y for y in orbit if action.mu[y] > 0]
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def _equivariant_bijection_exists(a, b):
    """Exhaustive search for a measure-preserving equivariant bijection.

    An equivariant map is determined by the image of one base point per
    orbit, so trying every candidate image is a complete search.
    """
    sa, sb = a.support, b.support
    if len(sa) != len(sb):
        return False
    orbits = _support_orbits(a)
    order = a.group.order

    def dfs(oi, used):
        if oi == len(orbits):
            return True
        x0 = orbits[oi][0]
        for y0 in sb:
            if y0 in used or b.mu[y0] != a.mu[x0]:
                continue
            fmap = {}
            vals = set()
            ok = True
            for g in range(order):
                xs = int(a.act[g, x0])
                ys = int(b.act[g, y0])
                prev = fmap.get(xs)
                if prev is None:
                    if ys in vals or ys in used or b.mu[ys] != a.mu[xs]:
                        ok = False
                        break
                    fmap[xs] = ys
                    vals.add(ys)
                elif prev != ys:
                    ok = False
                    break
            if ok and dfs(oi + 1, used | vals):
                return True
        return False

    return dfs(0, frozenset())


@dataclass(frozen=True)
class IsoReport:
    nu_equal: bool
    brute_iso: bool
    agree: bool


def iso_test(a, b):
    """Compare the stabilizer distributions and search for a direct bijection.

    Both routes are computed independently; for extremely nonfree actions
    they must agree (``agree`` records it). Raises NotExtremelyNonfree when
    either action has repeated stabilizers on its support.
    """
    if a.group is not b.group and a.group.elements != b.group.elements:
        raise InputError("actions must be of the same group")
    if not classify_action(a).extremely_nonfree:
        raise NotExtremelyNonfree("first action has repeated stabilizers")
    if not classify_action(b).extremely_nonfree:
        raise NotExtremelyNonfree("second action has repeated stabilizers")
    if len(a.support) > ISO_SEARCH_BOUND or len(b.support) > ISO_SEARCH_BOUND:
        raise IsoSearchBoundExceeded(
            f"supports larger than {ISO_SEARCH_BOUND} points"
        )
    lattice = enumerate_subgroups(a.group)
    nu_equal = (
        pushforward_measure(a, lattice).weights
        == pushforward_measure(b, lattice).weights
    )
    brute = _equivariant_bijection_exists(a, b)
    return IsoReport(nu_equal=nu_equal, brute_iso=brute, agree=nu_equal == brute)


# -- unitary representation rank ------------------------------------------------


@dataclass(frozen=True)
class KoopmanReport:
    applicable: bool
    rank: int | None
    irreducible_complement: bool | None


def koopman_rank(action):
    """Number of group orbits on ordered point pairs, for uniform transitive
    actions; the complement of constants is irreducible exactly at rank 2.

    Non-uniform or intransitive actions are reported inapplicable. On a
    single point the complement is empty and the flag is None.
    """
    uniform = len(set(action.mu)) == 1
    transitive = len(_support_orbits(action)) == 1 and len(
        action.support
    ) == action.n_points
    if not (uniform and transitive):
        return KoopmanReport(applicable=False, rank=None, irreducible_complement=None)
    n = action.n_points
    seen = np.zeros((n, n), dtype=bool)
    gens = action.group.generator_indices or (action.group.identity_index,)
    rank = 0
    for a in range(n):
        for c in range(n):
            if seen[a, c]:
                continue
            rank += 1
            todo = [(a, c)]
            seen[a, c] = True
            while todo:
                x, y = todo.pop()
                for g in gens:
                    p = (int(action.act[g, x]), int(action.act[g, y]))
                    if not seen[p]:
                        seen[p] = True
                        todo.append(p)
    return KoopmanReport(
        applicable=True,
        rank=rank,
        irreducible_complement=(rank == 2) if n >= 2 else None,
    )
