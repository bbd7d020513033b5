"""Arithmetic in the Klein bottle group.

Elements are pairs of integers (n, m) with the twisted product

    (n1, m1) * (n2, m2) = (n1 + (-1)**m1 * n2, m1 + m2),

so the second coordinate acts on the first by sign.  All arithmetic is
exact; coordinates may be arbitrarily large Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _sgn(m: int) -> int:
    """(-1)**m without building a big power."""
    return -1 if m % 2 else 1


@dataclass(frozen=True)
class GroupElement:
    """A group element (n, m)."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise TypeError("coordinates must be integers")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return mul(self, other)

    def __pow__(self, k: int) -> "GroupElement":
        return power(self, k)

    def inverse(self) -> "GroupElement":
        return inv(self)

    def is_identity(self) -> bool:
        return self.n == 0 and self.m == 0


IDENTITY = GroupElement(0, 0)


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    """Product g*h.

    >>> mul(GroupElement(1, 1), GroupElement(1, 1))
    GroupElement(n=0, m=2)
    """
    return GroupElement(g.n + _sgn(g.m) * h.n, g.m + h.m)


def inv(g: GroupElement) -> GroupElement:
    """Inverse: (n, m)^-1 = ((-1)**(1-m) * n, -m)."""
    return GroupElement(-_sgn(g.m) * g.n, -g.m)


def power(g: GroupElement, k: int) -> GroupElement:
    """k-th power by closed form, any integer k.

    Even second coordinate gives the straight line (k*n, k*m); odd second
    coordinate alternates, killing the first coordinate at even k:

    >>> power(GroupElement(3, 1), 2)
    GroupElement(n=0, m=2)
    >>> power(GroupElement(3, 1), -3)
    GroupElement(n=3, m=-3)
    """
    if g.m % 2 == 0:
        return GroupElement(k * g.n, k * g.m)
    if k % 2 == 0:
        return GroupElement(0, k * g.m)
    return GroupElement(g.n, k * g.m)


def conj(t: GroupElement, g: GroupElement) -> GroupElement:
    """Conjugate t*g*t^-1 by closed form.

    The second coordinate of g survives; the first is reflected by t.m and
    translated by t.n exactly when g.m is odd:

        t g t^-1 = ((-1)**t.m * g.n + t.n - (-1)**g.m * t.n, g.m)
    """
    return GroupElement(_sgn(t.m) * g.n + t.n - _sgn(g.m) * t.n, g.m)


@dataclass(frozen=True)
class AffineMap:
    """An affine map of the plane (t, r) -> (shift_x + sign*t, shift_y + r).

    sign is +1 or -1; the shifts are exact rationals (plain ints allowed).
    """

    sign: int
    shift_x: Fraction
    shift_y: Fraction

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def apply(self, t: Fraction, r: Fraction) -> tuple[Fraction, Fraction]:
        return (self.shift_x + self.sign * t, self.shift_y + r)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other, as maps of the plane."""
        return AffineMap(
            self.sign * other.sign,
            self.shift_x + self.sign * other.shift_x,
            self.shift_y + other.shift_y,
        )

    def is_identity(self) -> bool:
        return self.sign == 1 and self.shift_x == 0 and self.shift_y == 0


AFFINE_IDENTITY = AffineMap(1, 0, 0)


def as_affine(g: GroupElement) -> AffineMap:
    """The plane isometry of g: (t, r) -> (g.n + (-1)**g.m * t, g.m + r).

    This representation is a homomorphism (compose matches mul) and is
    faithful: only (0, 0) maps to the identity map, since a map with
    sign -1 moves every point with t != g.n/2 horizontally and every
    point vertically unless shift_y = 0.
    """
    return AffineMap(_sgn(g.m), g.n, g.m)


__all__ = [
    "GroupElement",
    "AffineMap",
    "IDENTITY",
    "AFFINE_IDENTITY",
    "mul",
    "inv",
    "power",
    "conj",
    "as_affine",
]
