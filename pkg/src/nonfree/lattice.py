"""Subgroup lattices under the conjugation action.

Enumeration is by cyclic extension: starting from the trivial subgroup,
every known subgroup is extended by one outside element at a time (elements
of the same double coset H g H generate the same extension, so one
representative per marked coset suffices). Every subgroup arises this way
along a maximal chain, and results are deduplicated by membership mask.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

import numpy as np

from .errors import InputError, LatticeBoundExceeded
from .jsonio import group_fingerprint
from .perm import FiniteGroup, Subgroup

DEFAULT_LATTICE_BOUND = 10_000


class SubgroupLattice:
    """All subgroups of a finite group, with conjugation structure.

    subgroups are sorted by (order, member tuple); ``conj_table[t][i]`` is the
    index of the conjugate of subgroup i by generator t; ``orbits`` partitions
    subgroup indices into conjugacy orbits; ``normalizer_indices[i]`` is the
    index of N(subgroups[i]).
    """

    def __init__(self, group, subgroups, conj_table, orbits, normalizer_indices):
        self.group = group
        self.subgroups = tuple(subgroups)
        self.conj_table = conj_table
        self.orbits = tuple(tuple(o) for o in orbits)
        self.normalizer_indices = tuple(normalizer_indices)
        self._mask_index = {s.mask: i for i, s in enumerate(self.subgroups)}
        self._orbit_of = {}
        for oid, orbit in enumerate(self.orbits):
            for i in orbit:
                self._orbit_of[i] = oid
        self._membership = {}

    def __len__(self):
        return len(self.subgroups)

    def index_of(self, subgroup_or_mask):
        mask = subgroup_or_mask if isinstance(subgroup_or_mask, int) else subgroup_or_mask.mask
        try:
            return self._mask_index[mask]
        except KeyError:
            raise InputError("subgroup does not belong to this lattice") from None

    def orbit_of(self, index):
        return self._orbit_of[index]

    def normalizer_index(self, index):
        return self.normalizer_indices[index]

    def fingerprint(self):
        return group_fingerprint(
            self.group.degree, [g.images for g in self.group.generators]
        )


def _closure_members(T, seed):
    """Sorted member tuple of the subgroup generated by the seed indices."""
    members = {0}
    todo = [s for s in seed if s != 0]
    while todo:
        a = todo.pop()
        if a in members:
            continue
        mem = np.fromiter(members, dtype=np.int32, count=len(members))
        members.add(a)
        new = set(T[a, mem].tolist()) | set(T[mem, a].tolist())
        new.add(int(T[a, a]))
        todo.extend(new - members)
    return tuple(sorted(members))


def _mask_of(members):
    out = 0
    for i in members:
        out |= 1 << i
    return out


def enumerate_subgroups(group, max_subgroups=DEFAULT_LATTICE_BOUND):
    """Enumerate the full subgroup lattice of a materialized group.

    Raises LatticeBoundExceeded when more than ``max_subgroups`` subgroups
    appear. The default-bound result is cached on the group.
    """
    if max_subgroups == DEFAULT_LATTICE_BOUND and group._lattice is not None:
        return group._lattice

    T = group.mul_table
    order = group.order
    trivial = (group.identity_index,)
    known = {_mask_of(trivial): trivial}
    # process small subgroups first: extensions of H have order > |H|
    heap = [(1, trivial)]
    while heap:
        _, members = heapq.heappop(heap)
        hmask = _mask_of(members)
        if len(members) == order:
            continue
        mem = np.fromiter(members, dtype=np.int32, count=len(members))
        marked = hmask
        for g in range(order):
            if marked >> g & 1:
                continue
            # every g' in gH or Hg satisfies <H, g'> = <H, g>
            for c in T[g, mem].tolist():
                marked |= 1 << c
            for c in T[mem, g].tolist():
                marked |= 1 << c
            new = _closure_members(T, members + (g,))
            nmask = _mask_of(new)
            if nmask not in known:
                known[nmask] = new
                if len(known) > max_subgroups:
                    raise LatticeBoundExceeded(
                        f"more than {max_subgroups} subgroups"
                    )
                heapq.heappush(heap, (len(new), new))

    ordered = sorted(known.values(), key=lambda m: (len(m), m))
    subgroups = [Subgroup(group, m) for m in ordered]
    mask_index = {s.mask: i for i, s in enumerate(subgroups)}

    gens = group.generator_indices
    conj_table = np.empty((len(gens), len(subgroups)), dtype=np.int32)
    for t, g in enumerate(gens):
        cp = group.conj_perm(g)
        for i, s in enumerate(subgroups):
            conj_members = tuple(sorted(int(x) for x in cp[list(s.members)]))
            conj_table[t, i] = mask_index[_mask_of(conj_members)]

    # conjugacy orbits of subgroups
    orbit_of = [-1] * len(subgroups)
    orbits = []
    for i in range(len(subgroups)):
        if orbit_of[i] >= 0:
            continue
        orbit = {i}
        todo = [i]
        while todo:
            j = todo.pop()
            for t in range(len(gens)):
                k = int(conj_table[t, j])
                if k not in orbit:
                    orbit.add(k)
                    todo.append(k)
        oid = len(orbits)
        for j in orbit:
            orbit_of[j] = oid
        orbits.append(tuple(sorted(orbit)))
    orbits.sort(key=lambda o: o[0])

    # normalizers: direct elementwise scan on one orbit representative, then
    # transported along orbit edges via N(gHg^-1) = g N(H) g^-1
    normalizer_masks = {}
    for orbit in orbits:
        rep = orbit[0]
        s = subgroups[rep]
        mem = np.array(s.members, dtype=np.int32)
        nm = [
            g for g in range(order)
            if np.array_equal(np.sort(group.conj_perm(g)[mem]), mem)
        ]
        normalizer_masks[rep] = _mask_of(nm)
        seen = {rep}
        todo = [rep]
        while todo:
            j = todo.pop()
            nj_members = [
                i for i in range(order) if normalizer_masks[j] >> i & 1
            ]
            for t, g in enumerate(gens):
                k = int(conj_table[t, j])
                if k in seen:
                    continue
                seen.add(k)
                cp = group.conj_perm(g)
                normalizer_masks[k] = _mask_of(int(cp[i]) for i in nj_members)
                todo.append(k)

    normalizer_indices = [
        mask_index[normalizer_masks[i]] for i in range(len(subgroups))
    ]

    lattice = SubgroupLattice(group, subgroups, conj_table, orbits, normalizer_indices)
    if max_subgroups == DEFAULT_LATTICE_BOUND:
        group._lattice = lattice
    return lattice


def conjugate_subgroup(subgroup, g):
    """The conjugate g H g^-1 as a Subgroup of the same group."""
    cp = subgroup.group.conj_perm(int(g))
    return Subgroup(
        subgroup.group, tuple(sorted(int(cp[i]) for i in subgroup.members))
    )


def normalizer(subgroup):
    """N(H) = {g : g H g^-1 = H}, computed by direct elementwise scan."""
    group = subgroup.group
    mem = np.array(subgroup.members, dtype=np.int32)
    members = [
        g for g in range(group.order)
        if np.array_equal(np.sort(group.conj_perm(g)[mem]), mem)
    ]
    return Subgroup(group, tuple(members))


def is_abnormal(lattice, index):
    """A subgroup is abnormal here when it equals its own normalizer."""
    return lattice.normalizer_indices[index] == index


def normalization_tower(lattice, index):
    """Iterated normalizers H < N(H) < N(N(H)) < ... up to the fixpoint.

    The chain is strictly increasing until it hits a self-normalizing
    subgroup, which on a finite group always happens.
    """
    chain = [index]
    while True:
        nxt = lattice.normalizer_indices[chain[-1]]
        if nxt == chain[-1]:
            break
        assert lattice.subgroups[nxt].order > lattice.subgroups[chain[-1]].order
        chain.append(nxt)
    return [lattice.subgroups[i] for i in chain]


def membership_set(lattice, g):
    """Indices of subgroups containing the element g (the set L_g)."""
    g = int(g)
    if g not in lattice._membership:
        lattice._membership[g] = frozenset(
            i for i, s in enumerate(lattice.subgroups) if g in s
        )
    return lattice._membership[g]


def weak_distance(h, k):
    """Ultrametric distance 2^-n in the word-metric ball filtration.

    n is the least radius at which the two subgroups' intersections with the
    ball B_n differ; equal subgroups are at distance 0. B_0 = {id} never
    separates, so nonzero distances are at most 1/2.
    """
    if h.group is not k.group:
        raise InputError("subgroups of different groups")
    if h.mask == k.mask:
        return Fraction(0)
    for n, ball in enumerate(h.group.word_balls()):
        if h.mask & ball != k.mask & ball:
            return Fraction(1, 2**n)
    raise AssertionError("distinct subgroups must differ inside the full group")


def lattice_report(lattice):
    """JSON-ready summary: one entry per subgroup plus orbit/abnormal data."""
    entries = []
    for i, s in enumerate(lattice.subgroups):
        entries.append(
            {
                "index": i,
                "order": s.order,
                "mask": hex(s.mask),
                "normalizer": lattice.normalizer_indices[i],
                "abnormal": is_abnormal(lattice, i),
                "orbit": lattice.orbit_of(i),
                "tower_length": len(normalization_tower(lattice, i)),
            }
        )
    return {
        "group": lattice.group.to_json(),
        "fingerprint": lattice.fingerprint(),
        "subgroup_count": len(lattice),
        "orbit_count": len(lattice.orbits),
        "orbits": [list(o) for o in lattice.orbits],
        "abnormal_indices": [
            i for i in range(len(lattice)) if is_abnormal(lattice, i)
        ],
        "subgroups": entries,
    }
