"""Named example groups and stock families of actions and measures.

Every construction here is deterministic: group elements, subgroup indices,
coset point numbering and orbit order never depend on hashing or runtime
state, so reports built from registry objects are reproducible byte for
byte.
"""

from __future__ import annotations

from functools import lru_cache

from .actions import MeasuredAction, adjoint_action
from .errors import InputError
from .lattice import enumerate_subgroups
from .measures import orbit_uniform
from .perm import Permutation, generate_group


def symmetric_group(n):
    if n < 1:
        raise InputError("n must be at least 1")
    if n == 1:
        return generate_group([], degree=1, name="S1")
    swap = Permutation(tuple([1, 0] + list(range(2, n))))
    cycle = Permutation(tuple(list(range(1, n)) + [0]))
    return generate_group([swap, cycle], name=f"S{n}")


def _cycle(n, *cycles):
    return Permutation.from_cycles(n, cycles)


_BUILDERS = {
    "C1": lambda: generate_group([], degree=1, name="C1"),
    "C2": lambda: generate_group([_cycle(2, (0, 1))], name="C2"),
    "C3": lambda: generate_group([_cycle(3, (0, 1, 2))], name="C3"),
    "C2xC2": lambda: generate_group(
        [_cycle(4, (0, 1)), _cycle(4, (2, 3))], name="C2xC2"
    ),
    "S3": lambda: symmetric_group(3),
    "A4": lambda: generate_group(
        [_cycle(4, (0, 1, 2)), _cycle(4, (1, 2, 3))], name="A4"
    ),
    "D4": lambda: generate_group(
        [_cycle(4, (0, 1, 2, 3)), _cycle(4, (1, 3))], name="D4"
    ),
    "S4": lambda: symmetric_group(4),
    "D6": lambda: generate_group(
        [_cycle(6, (0, 1, 2, 3, 4, 5)), _cycle(6, (1, 5), (2, 4))], name="D6"
    ),
    "Q8": lambda: generate_group(
        [
            Permutation((1, 4, 3, 6, 5, 0, 7, 2)),
            Permutation((2, 7, 4, 1, 6, 3, 0, 5)),
        ],
        name="Q8",
    ),
    "S5": lambda: symmetric_group(5),
}

ACCEPTANCE_GROUPS = ("C2", "C2xC2", "S3", "D4", "Q8", "A4", "S4", "D6", "S5")


@lru_cache(maxsize=None)
def named_group(name):
    try:
        builder = _BUILDERS[name]
    except KeyError:
        known = ", ".join(sorted(_BUILDERS))
        raise InputError(f"unknown group {name!r}; known: {known}") from None
    return builder()


def group_names():
    return tuple(sorted(_BUILDERS))


def transitive_actions(group, max_points=8):
    """Coset actions on up to max_points points, one per subgroup orbit.

    Returns (subgroup index, action) pairs in lattice orbit order; every
    transitive action of the group on that few points is isomorphic to
    exactly one of them.
    """
    lattice = enumerate_subgroups(group)
    out = []
    for orbit in lattice.orbits:
        rep = orbit[0]
        H = lattice.subgroups[rep]
        if group.order // H.order <= max_points:
            out.append((rep, MeasuredAction.coset_action(group, H)))
    return out


def adjoint_orbit_actions(group):
    """Conjugation on each subgroup orbit with uniform measure (ergodic)."""
    lattice = enumerate_subgroups(group)
    return [
        (i, adjoint_action(lattice, orbit))
        for i, orbit in enumerate(lattice.orbits)
    ]


def ergodic_lattice_measures(group):
    """The uniform measure on each conjugation orbit of subgroups."""
    lattice = enumerate_subgroups(group)
    return [orbit_uniform(lattice, orbit[0]) for orbit in lattice.orbits]
