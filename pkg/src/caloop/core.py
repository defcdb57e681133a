"""The free 2-generated commutative automorphic loops of nilpotency class 3 and 2.

Elements of the class-3 loop are 8-tuples of integers: the exponents
(a1..a8) in the unique canonical word

    (x^a1 y^a2 . u1^a3 u2^a4) v1^a5 v2^a6 v3^a7 v4^a8

over the free generators x, y, the associators u1 = (x,x,y), u2 = (x,y,y)
and the compounded associators v1 = (x,x,u1), v2 = (x,x,u2), v3 = (y,y,u1),
v4 = (y,y,u2).  Multiplication is an explicit polynomial map on exponents;
it is total, commutative, and has exact two-sided division.

The class-2 loop lives on 4-tuples (exponents of x, y, u1, u2) and is the
image of the class-3 loop under truncation to the first four coordinates.

The `*_coords` functions are the raw kernel on plain tuples (hot paths use
them directly); :class:`Elem8` / :class:`Elem4` wrap them with operators.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .arith import alpha, beta

__all__ = [
    "Elem8",
    "Elem4",
    "IDENTITY",
    "IDENTITY4",
    "X",
    "Y",
    "U1",
    "U2",
    "V1",
    "V2",
    "V3",
    "V4",
    "basis",
    "mul_coords",
    "left_div_coords",
    "inv_coords",
    "pow_coords",
    "mul4_coords",
    "project_coords",
]

Coords8 = tuple  # 8 ints
Coords4 = tuple  # 4 ints

_ZERO8 = (0, 0, 0, 0, 0, 0, 0, 0)
_ZERO4 = (0, 0, 0, 0)


def mul_coords(a: Sequence[int], b: Sequence[int]) -> Coords8:
    """Product of two canonical 8-tuples of exponents.

    The first two coordinates add; coordinates 3-8 add and pick up a
    correction polynomial in the earlier coordinates of both factors.
    The expression is symmetric in (a, b), so the loop is commutative.
    """
    a1, a2, a3, a4, a5, a6, a7, a8 = a
    b1, b2, b3, b4, b5, b6, b7, b8 = b

    s1 = a1 + b1
    s2 = a2 + b2
    s3 = a3 + b3
    s4 = a4 + b4
    p11 = a1 * b1
    p22 = a2 * b2
    cross = a1 * b2 + a2 * b1

    ba1 = a1 * a1 - a1  # beta(a1)
    bb1 = b1 * b1 - b1
    ba2 = a2 * a2 - a2
    bb2 = b2 * b2 - b2
    aa1 = (a1 * a1 * a1 - a1) // 3  # alpha(a1); 3 | n^3 - n always
    ab1 = (b1 * b1 * b1 - b1) // 3
    aa2 = (a2 * a2 * a2 - a2) // 3
    ab2 = (b2 * b2 * b2 - b2) // 3
    as1 = (s1 * s1 * s1 - s1) // 3
    as2 = (s2 * s2 * s2 - s2) // 3

    return (
        s1,
        s2,
        s3 - p11 * s2,
        s4 + p22 * s1,
        a5 + b5
        + s2 * (b1 * aa1 + a1 * ab1)
        + a2 * (a1 * bb1 + b1 * b1 * ba1)
        + b2 * (b1 * ba1 + a1 * a1 * bb1)
        - p11 * s3,
        a6 + b6
        + 2 * p11 * p22 * s1
        + s2 * (a1 * bb1 + b1 * ba1)
        + (ba2 + bb2) * (a1 * b1 * b1 + b1 * a1 * a1)
        - p22 * as1
        - p11 * s4
        - s3 * cross,
        a7 + b7
        - 2 * p11 * p22 * s2
        - s1 * (a2 * bb2 + b2 * ba2)
        - (ba1 + bb1) * (a2 * b2 * b2 + b2 * a2 * a2)
        + p11 * as2
        - p22 * s3
        - s4 * cross,
        a8 + b8
        - s1 * (a2 * ab2 + b2 * aa2)
        - a1 * (a2 * bb2 + b2 * b2 * ba2)
        - b1 * (b2 * ba2 + a2 * a2 * bb2)
        - p22 * s4,
    )


def left_div_coords(a: Sequence[int], c: Sequence[int]) -> Coords8:
    """The unique b with mul_coords(a, b) == c.

    Closed-form back-substitution: coordinates 1-2 of the product are linear
    in b, coordinates 3-4 depend additionally only on b1, b2, and
    coordinates 5-8 only on b1..b4, so each block is solved by subtracting a
    product with the already-known block (no search involved).
    """
    b1 = c[0] - a[0]
    b2 = c[1] - a[1]
    t = mul_coords(a, (b1, b2, 0, 0, 0, 0, 0, 0))
    b3 = c[2] - t[2]
    b4 = c[3] - t[3]
    t = mul_coords(a, (b1, b2, b3, b4, 0, 0, 0, 0))
    return (b1, b2, b3, b4, c[4] - t[4], c[5] - t[5], c[6] - t[6], c[7] - t[7])


def inv_coords(a: Sequence[int]) -> Coords8:
    """Inverse element: the unique b with a * b = identity."""
    return left_div_coords(a, _ZERO8)


def pow_coords(a: Sequence[int], n: int) -> Coords8:
    """n-th power by iterated multiplication (inverse first for n < 0)."""
    base = tuple(a)
    if n < 0:
        base = inv_coords(base)
        n = -n
    acc = _ZERO8
    for _ in range(n):
        acc = mul_coords(acc, base)
    return acc


def mul4_coords(a: Sequence[int], b: Sequence[int]) -> Coords4:
    """Product in the class-2 loop on 4-tuples of exponents."""
    a1, a2, a3, a4 = a
    b1, b2, b3, b4 = b
    return (
        a1 + b1,
        a2 + b2,
        a3 + b3 - a1 * b1 * (a2 + b2),
        a4 + b4 + a2 * b2 * (a1 + b1),
    )


def project_coords(a: Sequence[int]) -> Coords4:
    """Truncation to the first four coordinates; a homomorphism onto the class-2 loop."""
    return (a[0], a[1], a[2], a[3])


class Elem8(tuple):
    """An element of the class-3 loop: 8 integer exponents in canonical form.

    Supports ``*`` (loop product), ``**`` (integer powers), ``~`` and
    :meth:`inverse`, and :meth:`left_divide`.  Instances are immutable and
    hashable; any 8-tuple of integers is a valid element.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]) -> "Elem8":
        coords = tuple(coords)
        if len(coords) != 8 or not all(isinstance(c, int) for c in coords):
            raise ValueError(f"Elem8 needs exactly 8 integers, got {coords!r}")
        return super().__new__(cls, coords)

    @property
    def coords(self) -> tuple:
        return tuple(self)

    def __mul__(self, other: "Elem8") -> "Elem8":
        return Elem8(mul_coords(self, other))

    def __pow__(self, n: int) -> "Elem8":
        return Elem8(pow_coords(self, n))

    def __invert__(self) -> "Elem8":
        return Elem8(inv_coords(self))

    def inverse(self) -> "Elem8":
        return Elem8(inv_coords(self))

    def left_divide(self, target: "Elem8") -> "Elem8":
        """Return the unique b with self * b == target."""
        return Elem8(left_div_coords(self, target))

    def project(self) -> "Elem4":
        return Elem4(project_coords(self))

    def __repr__(self) -> str:
        return f"Elem8{tuple(self)!r}"


class Elem4(tuple):
    """An element of the class-2 loop: 4 integer exponents x, y, u1, u2."""

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]) -> "Elem4":
        coords = tuple(coords)
        if len(coords) != 4 or not all(isinstance(c, int) for c in coords):
            raise ValueError(f"Elem4 needs exactly 4 integers, got {coords!r}")
        return super().__new__(cls, coords)

    @property
    def coords(self) -> tuple:
        return tuple(self)

    def __mul__(self, other: "Elem4") -> "Elem4":
        return Elem4(mul4_coords(self, other))

    def __repr__(self) -> str:
        return f"Elem4{tuple(self)!r}"


def basis(i: int) -> Elem8:
    """The i-th basis element (1-based): 1 in coordinate i, 0 elsewhere."""
    if not 1 <= i <= 8:
        raise ValueError(f"basis index must be 1..8, got {i}")
    return Elem8(tuple(1 if k == i - 1 else 0 for k in range(8)))


IDENTITY = Elem8(_ZERO8)
IDENTITY4 = Elem4(_ZERO4)
X = basis(1)
Y = basis(2)
U1 = basis(3)
U2 = basis(4)
V1 = basis(5)
V2 = basis(6)
V3 = basis(7)
V4 = basis(8)
