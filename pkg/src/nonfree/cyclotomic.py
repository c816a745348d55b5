"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are residues modulo the m-th cyclotomic polynomial with Fraction
coefficients. Only tiny m occur (divisors of group exponents), so plain
dense polynomial arithmetic with cached power-reduction tables is enough.
"""

from __future__ import annotations

from cmath import exp, pi
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients of Phi_m, low degree first, as ints."""
    if m < 1:
        raise ValueError("m must be positive")
    # x^m - 1 divided by Phi_d for every proper divisor d of m
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num, den):
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for i, dc in enumerate(den):
            num[i + k] -= q * dc
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def _power_table(m):
    """x^j mod Phi_m for j up to max(2*deg - 2, m - 1), as Fraction tuples."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    reps = []
    cur = [Fraction(0)] * deg
    if deg > 0:
        cur[0] = Fraction(1)
    reps.append(tuple(cur))
    for _ in range(max(2 * deg - 2, m - 1)):
        nxt = [Fraction(0)] + cur[:]
        lead = nxt.pop()
        if lead:
            for i in range(deg):
                nxt[i] -= lead * phi[i]
        cur = nxt
        reps.append(tuple(cur))
    return tuple(reps), deg


class Cyc:
    """An element of Q(zeta_m) in the power basis 1, x, ..., x^(deg-1)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        reps, deg = _power_table(m)
        c = [Fraction(0)] * deg
        for j, q in enumerate(coeffs):
            if q:
                rep = reps[j]
                for i in range(deg):
                    c[i] += q * rep[i]
        self.m = m
        self.coeffs = tuple(c)

    @classmethod
    def rational(cls, m, q):
        return cls(m, [Fraction(q)])

    @classmethod
    def root(cls, m, k=1):
        """zeta_m ** k."""
        k %= m
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return cls(m, coeffs)

    @classmethod
    def from_powers(cls, m, powers):
        """Sum of mult * zeta_m**k over a {k: mult} mapping."""
        coeffs = [Fraction(0)] * m
        for k, mult in powers.items():
            coeffs[k % m] += Fraction(mult)
        return cls(m, coeffs)

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.m != self.m:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = Cyc.__new__(Cyc)
        out.m = self.m
        out.coeffs = tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Cyc.__new__(Cyc)
        out.m = self.m
        out.coeffs = tuple(-a for a in self.coeffs)
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        reps, deg = _power_table(self.m)
        prod = [Fraction(0)] * (2 * deg - 1 if deg else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = [Fraction(0)] * deg
        for j, q in enumerate(prod):
            if q:
                rep = reps[j]
                for i in range(deg):
                    out[i] += q * rep[i]
        res = Cyc.__new__(Cyc)
        res.m = self.m
        res.coeffs = tuple(out)
        return res

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational:
            raise ValueError(f"not rational: {self!r}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def galois(self, k):
        """Apply zeta -> zeta**k; k must be a unit mod m."""
        from math import gcd

        if gcd(k, self.m) != 1:
            raise ValueError("galois exponent must be coprime to m")
        coeffs = [Fraction(0)] * self.m
        for i, c in enumerate(self.coeffs):
            coeffs[(i * k) % self.m] += c
        return Cyc(self.m, coeffs)

    def conjugate(self):
        return self.galois(self.m - 1)

    def complex_value(self):
        z = exp(2j * pi / self.m)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        if self.is_rational:
            return f"Cyc({self.m}, {self.rational_value()})"
        terms = [
            f"{c}*z^{i}" if i else f"{c}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return f"Cyc({self.m}: {' + '.join(terms)})"
