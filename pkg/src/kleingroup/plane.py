"""The action on the plane and on the space of affine lines.

Points carry exact rational coordinates.  A group element (n, m) acts by
(t, r) -> (n + (-1)**m * t, m + r): a horizontal translation or glide
composed with a vertical shift.  Lines of rational slope (or vertical
lines) are carried to lines of the same kind, and parallel lines bound a
flat strip whose width is the invariant behind the line-space metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .core import GroupElement, _sgn

VERTICAL = math.inf


def _as_fraction(x) -> Fraction:
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {x!r}")


@dataclass(frozen=True)
class PlanePoint:
    t: Fraction
    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", _as_fraction(self.t))
        object.__setattr__(self, "r", _as_fraction(self.r))


@dataclass(frozen=True)
class Line:
    """The line r = slope*t + intercept, or t = intercept when vertical.

    slope is an exact rational, or the distinguished value VERTICAL
    (math.inf).  Fractions normalize themselves, so equal lines compare
    equal.
    """

    slope: Fraction | float
    intercept: Fraction

    def __post_init__(self) -> None:
        if self.slope != VERTICAL:
            object.__setattr__(self, "slope", _as_fraction(self.slope))
        object.__setattr__(self, "intercept", _as_fraction(self.intercept))

    @property
    def vertical(self) -> bool:
        return self.slope == VERTICAL

    def contains(self, p: PlanePoint) -> bool:
        if self.vertical:
            return p.t == self.intercept
        return p.r == self.slope * p.t + self.intercept


def act_point(g: GroupElement, p: PlanePoint) -> PlanePoint:
    """g.(t, r) = (g.n + (-1)**g.m * t, g.m + r)."""
    return PlanePoint(g.n + _sgn(g.m) * p.t, g.m + p.r)


def act_line(g: GroupElement, line: Line) -> Line:
    """The image of a line, again a line of the allowed kind.

    Finite slope a goes to (-1)**g.m * a with intercept
    b + g.m - (-1)**g.m * a * g.n; a vertical line at b moves to
    g.n + (-1)**g.m * b.
    """
    s = _sgn(g.m)
    if line.vertical:
        return Line(VERTICAL, g.n + s * line.intercept)
    a, b = line.slope, line.intercept
    return Line(s * a, b + g.m - s * a * g.n)


@dataclass(frozen=True)
class LineDistance:
    """Outcome of the line metric: strip width (squared, exact) and the
    bounded distance width/(1+width); non-parallel lines sit at distance 1."""

    parallel: bool
    width_sq: Fraction | None
    value: float


def line_distance(l1: Line, l2: Line) -> LineDistance:
    """Distance in the space of lines.

    >>> line_distance(Line(VERTICAL, Fraction(0)), Line(VERTICAL, Fraction(3))).value
    0.75
    """
    if l1.slope != l2.slope:
        return LineDistance(False, None, 1.0)
    if l1.vertical:
        width_sq = (l1.intercept - l2.intercept) ** 2
    else:
        # perpendicular distance between parallel lines of slope a
        width_sq = (l1.intercept - l2.intercept) ** 2 / (1 + l1.slope**2)
    width = math.sqrt(width_sq)
    return LineDistance(True, width_sq, width / (1 + width))


def stabilizes(g: GroupElement, line: Line) -> bool:
    """Whether g maps the line to itself, by the closed criterion.

    A vertical line at b is preserved iff g.n == (1 - (-1)**g.m) * b.
    A line of finite slope a needs g.m even and nonzero with a == g.m/g.n,
    except that slope 0 is preserved exactly by the horizontal (n, 0).
    Always agrees with act_line(g, line) == line.
    """
    if line.vertical:
        return g.n == (1 - _sgn(g.m)) * line.intercept
    if g.m % 2:
        return False
    if g.m == 0:
        return g.n == 0 or line.slope == 0
    if g.n == 0:
        return False
    return line.slope == Fraction(g.m, g.n)


def is_axis(line: Line) -> bool:
    """Whether the line is the axis of some nontrivial element.

    Lines of rational slope and rational intercept, and vertical lines of
    rational intercept, always are; the data model admits nothing else.
    """
    return True


__all__ = [
    "PlanePoint",
    "Line",
    "LineDistance",
    "VERTICAL",
    "act_point",
    "act_line",
    "line_distance",
    "stabilizes",
    "is_axis",
]
