"""Associator calculus: associators, inner mappings, nuclei and the center.

The associator (a, b, c) is the unique t with (a*b)*c = (a*(b*c))*t; it is
computed from that defining equation by exact division, never from derived
identities, so the identity catalog in :mod:`caloop.symbolic` and the
sampled checks in the tests remain independent evidence.

Membership in the structural subloops uses the coordinate description

    associator subloop = middle nucleus = {a1 = a2 = 0}
    left/right/full nucleus = center    = {a1 = a2 = a3 = a4 = 0}

which the symbolic catalog verifies against the mapping-theoretic
definitions (entries ``middle-nucleus-*`` and ``center-*``).
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional, Sequence

from .core import IDENTITY, X, Y, Elem8, left_div_coords, mul_coords

__all__ = [
    "associator",
    "inner_l",
    "inner_t",
    "NucleusKind",
    "is_member",
    "witness_noncentral",
    "Witness",
    "assoc_coords",
    "inner_l_coords",
]


def assoc_coords(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> tuple:
    """Raw-tuple associator: solves (a*(b*c)) * t = (a*b)*c for t."""
    return left_div_coords(mul_coords(a, mul_coords(b, c)), mul_coords(mul_coords(a, b), c))


def inner_l_coords(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> tuple:
    """Raw-tuple image of c under the inner mapping L_{a,b} = L_a L_b L_{ba}^-1."""
    return left_div_coords(mul_coords(b, a), mul_coords(b, mul_coords(a, c)))


def associator(a: Elem8, b: Elem8, c: Elem8) -> Elem8:
    """The associator (a, b, c)."""
    return Elem8(assoc_coords(a, b, c))


def inner_l(a: Elem8, b: Elem8, c: Elem8) -> Elem8:
    """Image of c under the inner mapping L_{a,b}."""
    return Elem8(inner_l_coords(a, b, c))


def inner_t(a: Elem8, c: Elem8) -> Elem8:
    """Image of c under T_a = R_a L_a^-1.

    The loop is commutative, so R_a = L_a and T_a is the identity map; the
    operation exists to complete the inner-mapping interface.
    """
    return c


class NucleusKind(enum.Enum):
    LEFT = "left"
    MIDDLE = "middle"
    RIGHT = "right"
    FULL = "full"
    CENTER = "center"
    ASSOCIATOR_SUBLOOP = "associator-subloop"


_WIDE = (NucleusKind.MIDDLE, NucleusKind.ASSOCIATOR_SUBLOOP)


def is_member(z: Elem8, kind: NucleusKind) -> bool:
    """Coordinate test for membership in the named structural subloop."""
    if kind in _WIDE:
        return z[0] == 0 and z[1] == 0
    return z[0] == 0 and z[1] == 0 and z[2] == 0 and z[3] == 0


class Witness(NamedTuple):
    """Concrete elements showing z is outside a nucleus: the associator with
    z placed in `slot` ('left'/'middle'/'right') among (a, b) is not 1."""

    a: Elem8
    b: Elem8
    slot: str
    value: Elem8


def _slot_assoc(z: Elem8, a: Elem8, b: Elem8, slot: str) -> Elem8:
    if slot == "left":
        return associator(z, a, b)
    if slot == "middle":
        return associator(a, z, b)
    return associator(a, b, z)


_SLOTS = {
    NucleusKind.LEFT: ("left",),
    NucleusKind.MIDDLE: ("middle",),
    NucleusKind.ASSOCIATOR_SUBLOOP: ("middle",),
    NucleusKind.RIGHT: ("right",),
    NucleusKind.FULL: ("left", "middle", "right"),
    NucleusKind.CENTER: ("left", "middle", "right"),
}

# Pairs that provably detect every non-member: (x,x,.) sees the y-exponent
# and, once a1 = a2 = 0, the u-exponents; (y,y,.) sees the x-exponent;
# (x,.,y) pins both generator exponents for the middle nucleus.
_CANDIDATE_PAIRS = ((X, X), (Y, Y), (X, Y), (Y, X))


def witness_noncentral(kind: NucleusKind, z: Elem8) -> Optional[Witness]:
    """Return elements witnessing that z lies outside the given subloop.

    Returns None when z is a member.  For a non-member the witness always
    exists among associators with generator pairs.
    """
    if is_member(z, kind):
        return None
    for slot in _SLOTS[kind]:
        for a, b in _CANDIDATE_PAIRS:
            value = _slot_assoc(z, a, b, slot)
            if value != IDENTITY:
                return Witness(a, b, slot, value)
    raise AssertionError(f"no witness found for {z!r} and {kind}")  # pragma: no cover
