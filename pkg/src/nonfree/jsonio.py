"""Exact-rational JSON helpers and canonical serialization.

Weights and probabilities travel through JSON as "p/q" strings so that no
value is ever rounded. Reports are serialized with sorted keys and a fixed
layout, so identical inputs produce byte-identical documents.
"""

import hashlib
import json
from fractions import Fraction

from .errors import InputError


def parse_fraction(value):
    """Parse "p/q" (or "p", or an int) into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {value!r}") from exc
    raise InputError(f"expected rational literal, got {type(value).__name__}")


def format_fraction(q):
    """Render a Fraction as the canonical "p/q" (or "p") string."""
    return str(Fraction(q))


def canonical_dumps(obj):
    """Deterministic JSON text: sorted keys, two-space indent, newline end."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def group_fingerprint(degree, generator_images):
    """Short stable hash of a group presentation (degree + generator images).

    Used to tie serialized measures to the lattice they index into.
    """
    doc = json.dumps(
        {"degree": degree, "generators": [list(map(int, g)) for g in generator_images]},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(doc.encode()).hexdigest()[:16]
