"""Finite permutation groups, fully materialized.

One composition convention is fixed for the whole package:

    (p * q)(x) = p(q(x))

i.e. the right factor acts first. Group elements are stored sorted
lexicographically by image tuple, so element indices are reproducible across
runs; the identity always gets index 0 (any non-identity permutation moves
its first moved point upward, hence compares larger).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DegreeMismatch, InputError, OrderBoundExceeded

DEFAULT_DEGREE_BOUND = 12
DEFAULT_ORDER_BOUND = 5040


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., n-1}, stored as its image tuple."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a bijection on 0..{len(images) - 1}: {images}")

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[y] for y in other.images))

    def inverse(self):
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self):
        return all(i == x for x, i in enumerate(self.images))

    @staticmethod
    def identity(degree):
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree, cycles):
        """Build from disjoint cycles, e.g. from_cycles(4, [(0, 1), (2, 3)])."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            for pos, a in enumerate(cyc):
                if a in seen:
                    raise InputError(f"cycles are not disjoint at point {a}")
                seen.add(a)
                images[a] = cyc[(pos + 1) % len(cyc)]
        return Permutation(tuple(images))

    def cycles(self, include_fixed=False):
        """Disjoint cycles, each rotated to start at its least point."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        """Map cycle length -> multiplicity, including fixed points."""
        ct = {}
        for cyc in self.cycles(include_fixed=True):
            ct[len(cyc)] = ct.get(len(cyc), 0) + 1
        return ct

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __repr__(self):
        cycs = self.cycles()
        if not cycs:
            return f"Permutation(id, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)
        return f"Permutation({body}, degree={self.degree})"


class FiniteGroup:
    """A fully materialized permutation group.

    Elements are indexed 0..order-1 in lexicographic image order. Heavyweight
    tables (Cayley table, conjugation permutations, word-metric balls) are
    built lazily and cached on the instance.
    """

    def __init__(self, degree, generators, elements, name=None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.name = name
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        self._images = np.array([p.images for p in self.elements], dtype=np.int32)
        self._row_index = {row.tobytes(): i for i, row in enumerate(self._images)}
        self._mul_table = None
        self._inv_table = None
        self._conj_perms = {}
        self._classes = None
        self._class_of = None
        self._word_balls = None
        self._lattice = None  # set by lattice.enumerate_subgroups

    # -- basic structure ---------------------------------------------------

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity_index(self):
        return 0

    def index_of(self, perm):
        try:
            return self._index[perm.images]
        except KeyError:
            raise InputError(f"{perm!r} is not an element of this group") from None

    @cached_property
    def generator_indices(self):
        return tuple(self.index_of(g) for g in self.generators)

    @property
    def mul_table(self):
        """Cayley table T with T[i, j] = index of elements[i] * elements[j]."""
        if self._mul_table is None:
            n = self.order
            T = np.empty((n, n), dtype=np.int32)
            E = self._images
            for i in range(n):
                rows = E[i][E]  # (n, degree): images of elements[i] * elements[j]
                T[i] = [self._row_index[r.tobytes()] for r in rows]
            self._mul_table = T
        return self._mul_table

    @property
    def inv_table(self):
        if self._inv_table is None:
            self._inv_table = np.array(
                [self.index_of(p.inverse()) for p in self.elements], dtype=np.int32
            )
        return self._inv_table

    def mul(self, i, j):
        return int(self.mul_table[i, j])

    def inv(self, i):
        return int(self.inv_table[i])

    def power(self, i, s):
        """Index of elements[i] ** s (s >= 0)."""
        out = self.identity_index
        for _ in range(s):
            out = self.mul(i, out)
        return out

    def conj_perm(self, g):
        """Array c with c[h] = index of elements[g] * elements[h] * elements[g]^-1."""
        if g not in self._conj_perms:
            E = self._images
            inv_images = np.argsort(E[g])
            rows = E[g][E[:, inv_images]]  # (order, degree)
            self._conj_perms[g] = np.array(
                [self._row_index[r.tobytes()] for r in rows], dtype=np.int32
            )
        return self._conj_perms[g]

    def element_order(self, i):
        return self.elements[i].order()

    @cached_property
    def exponent(self):
        return math.lcm(*(self.element_order(i) for i in range(self.order)))

    # -- conjugacy classes ---------------------------------------------------

    @property
    def classes(self):
        """Conjugacy classes as sorted index tuples, ordered by (size, least index)."""
        if self._classes is None:
            seen = [False] * self.order
            classes = []
            gen_conj = [self.conj_perm(g) for g in self.generator_indices]
            for i in range(self.order):
                if seen[i]:
                    continue
                orbit = {i}
                todo = [i]
                while todo:
                    h = todo.pop()
                    for cp in gen_conj:
                        c = int(cp[h])
                        if c not in orbit:
                            orbit.add(c)
                            todo.append(c)
                for j in orbit:
                    seen[j] = True
                classes.append(tuple(sorted(orbit)))
            classes.sort(key=lambda c: (len(c), c[0]))
            self._classes = tuple(classes)
        return self._classes

    @property
    def class_of(self):
        """Array mapping element index -> conjugacy class index."""
        if self._class_of is None:
            out = np.empty(self.order, dtype=np.int32)
            for k, cls in enumerate(self.classes):
                for i in cls:
                    out[i] = k
            self._class_of = out
        return self._class_of

    # -- word metric ---------------------------------------------------------

    def word_balls(self):
        """Masks of balls B_0 subset B_1 subset ... in the word metric.

        Letters are the stored generators and their inverses; B_0 = {id}.
        The list ends at the first ball equal to the whole group.
        """
        if self._word_balls is None:
            letters = sorted(
                {g for g in self.generator_indices}
                | {self.inv(g) for g in self.generator_indices}
            )
            balls = [1 << self.identity_index]
            current = [self.identity_index]
            members = {self.identity_index}
            full = (1 << self.order) - 1
            while balls[-1] != full and current:
                frontier = []
                for x in current:
                    for l in letters:
                        y = self.mul(x, l)
                        if y not in members:
                            members.add(y)
                            frontier.append(y)
                if not frontier:
                    break
                balls.append(balls[-1] | sum(1 << y for y in frontier))
                current = frontier
            self._word_balls = balls
        return self._word_balls

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {
            "degree": self.degree,
            "generators": [list(g.images) for g in self.generators],
        }

    def __repr__(self):
        label = self.name or f"degree {self.degree}"
        return f"FiniteGroup({label}, order {self.order})"


def generate_group(generators, degree=None, *, degree_bound=DEFAULT_DEGREE_BOUND,
                   order_bound=DEFAULT_ORDER_BOUND, name=None):
    """Materialize the group generated by permutations via breadth-first closure.

    Parameters
    ----------
    generators : iterable of Permutation or image lists
    degree : required when the generator list is empty
    degree_bound, order_bound : hard limits; exceeding raises OrderBoundExceeded
    """
    gens = []
    for g in generators:
        gens.append(g if isinstance(g, Permutation) else Permutation(tuple(g)))
    if degree is None:
        if not gens:
            raise InputError("an empty generator list needs an explicit degree")
        degree = gens[0].degree
    degree = int(degree)
    if degree < 1:
        raise InputError("degree must be at least 1")
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(
                f"generator degree {g.degree} does not match degree {degree}"
            )
    if degree > degree_bound:
        raise OrderBoundExceeded(f"degree {degree} exceeds bound {degree_bound}")

    identity = Permutation.identity(degree)
    elems = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in elems:
                    elems.add(y)
                    new.append(y)
                    if len(elems) > order_bound:
                        raise OrderBoundExceeded(
                            f"group order exceeds bound {order_bound}"
                        )
        frontier = new
    ordered = sorted(elems, key=lambda p: p.images)
    return FiniteGroup(degree, gens, ordered, name=name)


def group_from_json(doc, *, degree_bound=DEFAULT_DEGREE_BOUND,
                    order_bound=DEFAULT_ORDER_BOUND, name=None):
    """Build a group from {"degree": n, "generators": [[images...], ...]}."""
    if not isinstance(doc, dict) or "generators" not in doc:
        raise InputError('group document needs a "generators" key')
    gens = doc["generators"]
    if not isinstance(gens, list):
        raise InputError('"generators" must be a list of image lists')
    degree = doc.get("degree")
    try:
        perms = [Permutation(tuple(g)) for g in gens]
    except (TypeError, InputError) as exc:
        raise InputError(f"bad generator list: {exc}") from exc
    return generate_group(
        perms, degree=degree, degree_bound=degree_bound,
        order_bound=order_bound, name=name,
    )


def conjugacy_classes(group):
    """Conjugacy classes of the group, sorted by (size, least element index)."""
    return group.classes


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted member indices inside a FiniteGroup."""

    group: FiniteGroup
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(int(m) for m in self.members))

    @cached_property
    def mask(self):
        """Bit mask over element indices; bit i is set iff element i belongs."""
        out = 0
        for i in self.members:
            out |= 1 << i
        return out

    @property
    def order(self):
        return len(self.members)

    def __contains__(self, element_index):
        return bool(self.mask >> int(element_index) & 1)

    def contains_subgroup(self, other):
        return self.mask & other.mask == other.mask

    def permutations(self):
        return [self.group.elements[i] for i in self.members]

    def __repr__(self):
        return f"Subgroup(order {self.order} of {self.group!r})"


def subgroup_closure(group, seed):
    """Smallest subgroup containing the seed element indices.

    Worklist closure over the Cayley table: when an element joins, all of its
    products with the current members (on both sides) are enqueued.
    """
    T = group.mul_table
    members = {group.identity_index}
    todo = list(dict.fromkeys(int(s) for s in seed))
    while todo:
        a = todo.pop()
        if a in members:
            continue
        mem = np.fromiter(members, dtype=np.int32, count=len(members))
        members.add(a)
        new = set(T[a, mem].tolist()) | set(T[mem, a].tolist())
        new.add(int(T[a, a]))
        todo.extend(new - members)
    return Subgroup(group, tuple(sorted(members)))
