"""Isotropy groups of lines and fixed lines of subgroups.

Every line has nontrivial infinite cyclic isotropy, determined by the
parity of its reduced slope numerator (or, for vertical lines, by
whether twice the intercept is an integer).  Dually, the fixed set of a
cyclic subgroup inside the space of lines is a point, a family of
parallel lines, or the family of vertical lines - never empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import GroupElement
from .plane import VERTICAL, Line, act_line, stabilizes
from .subgroups import CyclicSubgroup, canonicalize, subgroup


def isotropy_group(line: Line) -> CyclicSubgroup:
    """The stabilizer of a line, always nontrivial infinite cyclic.

    For slope a1/a2 in lowest terms (a2 > 0) the stabilizer is
    <(a2, a1)> when a1 is even and <(2*a2, 2*a1)> when a1 is odd; slope
    zero gives the horizontal <(1, 0)>.  A vertical line at b is flipped
    onto itself by <(2b, 1)> when 2b is an integer and otherwise only
    translated along itself, by <(0, 2)>.

    >>> isotropy_group(Line(Fraction(2, 3), Fraction(4))).gen
    GroupElement(n=3, m=2)
    >>> isotropy_group(Line(Fraction(1, 2), Fraction(0))).gen
    GroupElement(n=4, m=2)
    """
    if line.vertical:
        double = 2 * line.intercept
        if double.denominator == 1:
            return subgroup(int(double), 1)
        return subgroup(0, 2)
    a = line.slope
    if a == 0:
        return subgroup(1, 0)
    a1, a2 = a.numerator, a.denominator
    if a1 % 2 == 0:
        return canonicalize(GroupElement(a2, a1))
    return canonicalize(GroupElement(2 * a2, 2 * a1))


@dataclass(frozen=True)
class FixedSetDescriptor:
    """The fixed lines of a subgroup, as a symbolic set.

    kind is one of "slope-family" (all lines of one finite slope),
    "vertical-family" (all vertical lines), "single-point" (one line of
    the line space), or "empty".
    """

    kind: str
    slope: Fraction | None = None
    line: Line | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("slope-family", "vertical-family", "single-point", "empty"):
            raise ValueError("unknown fixed-set kind")
        if (self.slope is not None) != (self.kind == "slope-family"):
            raise ValueError("slope goes exactly with slope-family")
        if (self.line is not None) != (self.kind == "single-point"):
            raise ValueError("line goes exactly with single-point")

    def contains_line(self, line: Line) -> bool:
        if self.kind == "slope-family":
            return not line.vertical and line.slope == self.slope
        if self.kind == "vertical-family":
            return line.vertical
        if self.kind == "single-point":
            return line == self.line
        return False


def fixed_set(s: CyclicSubgroup) -> FixedSetDescriptor:
    """The fixed lines of s (equivalently, of its generator).

    >>> fixed_set(subgroup(1, 2)).slope
    Fraction(2, 1)
    >>> fixed_set(subgroup(3, 1)).line
    Line(slope=inf, intercept=Fraction(3, 2))
    """
    n, m = s.gen.n, s.gen.m
    if m % 2:
        # a glide flip fixes exactly one vertical line, through n/2
        return FixedSetDescriptor("single-point", line=Line(VERTICAL, Fraction(n, 2)))
    if m == 0:
        return FixedSetDescriptor("slope-family", slope=Fraction(0))
    if n == 0:
        return FixedSetDescriptor("vertical-family")
    return FixedSetDescriptor("slope-family", slope=Fraction(m, n))


def _fraction_grid(bound: int) -> list[Fraction]:
    vals = {Fraction(p, q) for q in range(1, bound + 1) for p in range(-bound, bound + 1)}
    return sorted(vals)


def line_grid(bound: int) -> list[Line]:
    """All lines with slope and intercept of height <= bound, plus the
    vertical lines with those intercepts."""
    fracs = _fraction_grid(bound)
    lines = [Line(a, b) for a in fracs for b in fracs]
    lines += [Line(VERTICAL, b) for b in fracs]
    return lines


def canonical_subgroups(bound: int) -> list[CyclicSubgroup]:
    """All canonical cyclic subgroups with |gen.n|, |gen.m| <= bound."""
    out = []
    for m in range(0, bound + 1):
        for n in range(-bound, bound + 1):
            if m == 0 and n <= 0:
                continue
            out.append(CyclicSubgroup(GroupElement(n, m)))
    return out


@dataclass
class IComplexReport:
    """Outcome of the isotropy/fixed-set sweep, with counterexamples."""

    bound: int
    checks: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def _fail(self, msg: str) -> None:
        if len(self.counterexamples) < 20:
            self.counterexamples.append(msg)


def verify_i_complex(sample_bound: int) -> IComplexReport:
    """Sweep all bounded lines and subgroups for the two structural facts
    that make the line space a useful building block: lines never have
    trivial isotropy, and nontrivial subgroups never have empty fixed
    sets (and the fixed set is a point or a contractible family).
    """
    report = IComplexReport(sample_bound)
    for line in line_grid(sample_bound):
        iso = isotropy_group(line)
        report.checks += 1
        if iso.gen.is_identity():
            report._fail(f"trivial isotropy for {line}")
        if not stabilizes(iso.gen, line):
            report._fail(f"isotropy generator {iso.gen} does not stabilize {line}")
        if act_line(iso.gen, line) != line:
            report._fail(f"act_line disagrees with stabilizes at {line}")
    for s in canonical_subgroups(sample_bound):
        d = fixed_set(s)
        report.checks += 1
        if d.kind == "empty":
            report._fail(f"empty fixed set for {s}")
        if d.kind == "single-point" and not stabilizes(s.gen, d.line):
            report._fail(f"claimed fixed line not fixed for {s}")
    return report


__all__ = [
    "FixedSetDescriptor",
    "IComplexReport",
    "isotropy_group",
    "fixed_set",
    "verify_i_complex",
    "line_grid",
    "canonical_subgroups",
]
