"""Exact character theory for small finite groups.

Character tables are computed by the class-algebra method: the class sums
act on the center, their simultaneous eigenvectors are found modulo a prime
p = 1 (mod exponent), scaled to character values mod p, and lifted exactly
to the cyclotomic field of the group exponent via the discrete Fourier sum
over powers of each class representative. Orthogonality is then verified
exactly, so a wrong table cannot escape.

Normalization convention: a "character" here is a positive definite central
function with value 1 at the identity. Irreducible table rows are kept with
their classical values (value at identity = degree); decomposition reports
weights against the normalized extreme points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .cyclotomic import Cyc
from .errors import InputError, NegativeWeight, TableBoundExceeded
from .exactla import PsdReport, psd_report

TABLE_ORDER_BOUND = 200


def _as_cyc(m, v):
    return v if isinstance(v, Cyc) else Cyc.rational(m, v)


@dataclass(frozen=True)
class Character:
    """A central function given by one exact value per conjugacy class."""

    group: object
    values: tuple  # Fraction or Cyc per class, identity class first

    def value(self, class_index):
        return self.values[class_index]

    def value_on(self, g):
        return self.values[int(self.group.class_of[int(g)])]

    @property
    def is_rational(self):
        return all(
            not isinstance(v, Cyc) or v.is_rational for v in self.values
        )

    def rational_values(self):
        out = []
        for v in self.values:
            out.append(v.rational_value() if isinstance(v, Cyc) else Fraction(v))
        return tuple(out)


def character_from_action(action):
    """Normalized character g -> measure of the fixed set of g."""
    from .actions import fixed_mass

    group = action.group
    vals = [None] * len(group.classes)
    for g in range(group.order):
        k = int(group.class_of[g])
        v = fixed_mass(action, g)
        if vals[k] is None:
            vals[k] = v
        elif vals[k] != v:
            raise AssertionError("fixed-set mass not constant on a class")
    return Character(group, tuple(vals))


def measure_character(nu):
    """Normalized character g -> total mass of subgroups containing g."""
    group = nu.lattice.group
    vals = [None] * len(group.classes)
    for g in range(group.order):
        k = int(group.class_of[g])
        v = nu.lg_mass(g)
        if vals[k] is None:
            vals[k] = v
        elif vals[k] != v:
            raise AssertionError("membership mass not constant on a class")
    return Character(group, tuple(vals))


# -- character table -----------------------------------------------------------


def _find_prime(m, order):
    lo = max(2 * isqrt(order) + 1, 3)
    p = m + 1
    while True:
        if p >= lo and _is_prime(p):
            return p
        p += m


def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _primitive_mth_root(p, m):
    for c in range(2, p):
        t = pow(c, (p - 1) // m, p)
        ok = t != 1 or m == 1
        q = 2
        mm = m
        while ok and q * q <= mm:
            if mm % q == 0:
                if pow(t, m // q, p) == 1:
                    ok = False
                while mm % q == 0:
                    mm //= q
            q += 1
        if ok and mm > 1 and pow(t, m // mm, p) == 1:
            ok = False
        if ok and pow(t, m, p) == 1:
            return t
    raise AssertionError("no primitive root found")


def _rref_modp(M, p):
    """Row-reduce mod p in place; returns list of pivot columns."""
    M %= p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if M[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = (M[r] * pow(int(M[r, c]), p - 2, p)) % p
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _nullspace_modp(M, p):
    """Columns spanning the kernel of M mod p."""
    A = M.copy().astype(np.int64)
    pivots = _rref_modp(A, p)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, fc in enumerate(free):
        basis[fc, j] = 1
        for r, pc in enumerate(pivots):
            basis[pc, j] = (-A[r, fc]) % p
    return basis


def _solve_in_basis(B, Y, p):
    """X with B X = Y mod p, B having independent columns."""
    r, d = B.shape
    aug = np.concatenate([B, Y], axis=1).astype(np.int64)
    pivots = _rref_modp(aug, p)
    assert pivots == list(range(d))
    return aug[:d, d:] % p


def character_table(group):
    """All irreducible characters, exactly, sorted by (degree, values)."""
    if group.order > TABLE_ORDER_BOUND:
        raise TableBoundExceeded(
            f"character table limited to order {TABLE_ORDER_BOUND}"
        )
    if getattr(group, "_char_table", None) is not None:
        return group._char_table

    classes = [tuple(c) for c in group.classes]
    r = len(classes)
    sizes = [len(c) for c in classes]
    reps = [c[0] for c in classes]
    assert classes[0] == (group.identity_index,)
    m = group.exponent
    p = _find_prime(m, group.order)

    T = group.mul_table
    class_of = group.class_of
    inv_class = [int(class_of[group.inv_table[reps[k]]]) for k in range(r)]

    P = class_of[T]
    a = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        rows = np.array(classes[i], dtype=np.int64)
        for j in range(r):
            cols = np.array(classes[j], dtype=np.int64)
            t = np.bincount(P[np.ix_(rows, cols)].ravel(), minlength=r)
            assert all(int(t[k]) % sizes[k] == 0 for k in range(r))
            a[i, j] = t // np.array(sizes)

    # split F_p^r into common eigenspaces of the class-multiplication maps
    blocks = [np.eye(r, dtype=np.int64)]
    for i in range(1, r):
        if all(b.shape[1] == 1 for b in blocks):
            break
        Mi = a[i] % p  # (Mi)[j, k] = a[i, j, k]
        new_blocks = []
        for B in blocks:
            d = B.shape[1]
            if d == 1:
                new_blocks.append(B)
                continue
            R = _solve_in_basis(B, (Mi @ B) % p, p)
            found = 0
            for lam in range(p):
                N = _nullspace_modp((R - lam * np.eye(d, dtype=np.int64)) % p, p)
                if N.shape[1]:
                    new_blocks.append((B @ N) % p)
                    found += N.shape[1]
                    if found == d:
                        break
            assert found == d
        blocks = new_blocks
    assert all(b.shape[1] == 1 for b in blocks) and len(blocks) == r

    theta = _primitive_mth_root(p, m)
    chars_p = []
    degrees = []
    for B in blocks:
        v = B[:, 0] % p
        assert v[0] % p != 0
        v = (v * pow(int(v[0]), p - 2, p)) % p  # omega, normalized at identity
        t = 0
        for k in range(r):
            t = (t + int(v[k]) * int(v[inv_class[k]]) * pow(sizes[k], p - 2, p)) % p
        d2 = (group.order * pow(t, p - 2, p)) % p
        d = None
        for x in range(1, p):
            if (x * x) % p == d2:
                d = min(x, p - x)
                break
        assert d is not None and d <= isqrt(group.order)
        chi = [
            (d * int(v[k]) * pow(sizes[k], p - 2, p)) % p for k in range(r)
        ]
        degrees.append(d)
        chars_p.append(chi)
    assert sum(d * d for d in degrees) == group.order

    minv = pow(m, p - 2, p)
    characters = []
    for chi_p, d in zip(chars_p, degrees):
        values = []
        for k in range(r):
            powers = {}
            g = reps[k]
            # chi_p at the classes of g^t, t = 0..m-1
            traj = []
            x = group.identity_index
            for _ in range(m):
                traj.append(chi_p[int(class_of[x])])
                x = int(T[g, x])
            for s in range(m):
                acc = 0
                for t in range(m):
                    acc = (acc + traj[t] * pow(theta, (-s * t) % (p - 1), p)) % p
                mult = (acc * minv) % p
                if mult:
                    assert mult <= d
                    powers[s] = mult
            val = Cyc.from_powers(m, powers)
            values.append(val)
        assert values[0] == Cyc.rational(m, d)
        characters.append(Character(group, tuple(values)))

    # exact orthogonality makes the table self-certifying
    for i, ci in enumerate(characters):
        for j, cj in enumerate(characters):
            acc = Cyc.rational(m, 0)
            for k in range(r):
                acc = acc + sizes[k] * _as_cyc(m, ci.values[k]) * _as_cyc(
                    m, cj.values[k]
                ).conjugate()
            expected = group.order if i == j else 0
            assert acc == Cyc.rational(m, expected)

    order_key = []
    for ch, d in zip(characters, degrees):
        key = tuple(_as_cyc(m, v).coeffs for v in ch.values)
        order_key.append((d, key))
    perm = sorted(range(r), key=lambda i: order_key[i])
    table = CharacterTable(
        group=group,
        conductor=m,
        characters=tuple(characters[i] for i in perm),
        degrees=tuple(degrees[i] for i in perm),
    )
    group._char_table = table
    return table


@dataclass(frozen=True)
class CharacterTable:
    group: object
    conductor: int
    characters: tuple
    degrees: tuple


# -- decomposition and axioms ----------------------------------------------------


@dataclass(frozen=True)
class DecompositionReport:
    """Weights of a normalized character over the normalized irreducibles."""

    coefficients: tuple  # multiplicity-style inner products <phi, chi_i>
    weights: tuple  # convex weights on chi_i / chi_i(1); sum to phi(e)
    degrees: tuple
    indecomposable: bool


def decompose_character(char, table=None):
    group = char.group
    if table is None:
        table = character_table(group)
    m = table.conductor
    sizes = [len(c) for c in group.classes]
    coeffs = []
    for chi in table.characters:
        acc = Cyc.rational(m, 0)
        for k in range(len(sizes)):
            acc = acc + sizes[k] * _as_cyc(m, char.values[k]) * _as_cyc(
                m, chi.values[k]
            ).conjugate()
        if not acc.is_rational:
            raise InputError("character has non-rational weight")
        c = acc.rational_value() / group.order
        if c < 0:
            raise NegativeWeight(f"weight {c} is negative")
        coeffs.append(c)
    # exact reassembly
    for k in range(len(sizes)):
        acc = Cyc.rational(m, 0)
        for c, chi in zip(coeffs, table.characters):
            acc = acc + c * _as_cyc(m, chi.values[k])
        assert acc == _as_cyc(m, char.values[k])
    weights = tuple(c * d for c, d in zip(coeffs, table.degrees))
    return DecompositionReport(
        coefficients=tuple(coeffs),
        weights=weights,
        degrees=table.degrees,
        indecomposable=sum(1 for w in weights if w) == 1,
    )


@dataclass(frozen=True)
class CharacterAxiomReport:
    normalized: bool
    central: bool
    inverse_symmetric: bool
    psd: bool
    psd_route: str
    elimination: PsdReport | None

    @property
    def all_pass(self):
        return self.normalized and self.central and self.inverse_symmetric and self.psd


def check_character_axioms(char):
    """Verify the defining properties of a normalized character, exactly.

    Rational-valued characters get the full positive semidefiniteness check
    on the order-by-order matrix phi(g^-1 h) with certificate pivots; others
    fall back to nonnegativity of the decomposition weights, which is
    equivalent for central functions.
    """
    group = char.group
    m = group.exponent
    normalized = _as_cyc(m, char.values[0]) == Cyc.rational(m, 1)
    central = True  # values are stored per class, nothing to check beyond type
    inv_ok = True
    for k in range(len(group.classes)):
        rep = group.classes[k][0]
        kinv = int(group.class_of[group.inv_table[rep]])
        if _as_cyc(m, char.values[kinv]) != _as_cyc(m, char.values[k]).conjugate():
            inv_ok = False
            break

    if char.is_rational:
        vals = char.rational_values()
        T = group.mul_table
        inv = group.inv_table
        class_of = group.class_of
        n = group.order
        M = [[vals[int(class_of[T[inv[g], h]])] for h in range(n)] for g in range(n)]
        rep = psd_report(M)
        return CharacterAxiomReport(
            normalized=normalized,
            central=central,
            inverse_symmetric=inv_ok,
            psd=rep.psd,
            psd_route="elimination",
            elimination=rep,
        )
    try:
        decompose_character(char)
        psd = True
    except NegativeWeight:
        psd = False
    return CharacterAxiomReport(
        normalized=normalized,
        central=central,
        inverse_symmetric=inv_ok,
        psd=psd,
        psd_route="weights",
        elimination=None,
    )
