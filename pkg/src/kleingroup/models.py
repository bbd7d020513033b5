"""Symbolic assembly of the two classifying-space models.

The join model stacks the plane against one real line of lines per
slope.  The pushout model glues, over the plane, one piece per
commensurability class: a line for the horizontal class, a join with an
integer family for the odd/vertical class, and one quotient line per
flat class.  The maps that do the gluing are exact and are exposed here
so their equivariance can be checked by sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import GroupElement, _sgn
from .isotropy import _fraction_grid, isotropy_group
from .plane import VERTICAL, Line, PlanePoint
from .subgroups import (
    Commensurator,
    CommClass,
    CyclicSubgroup,
    SubgroupFamily,
    TRANSLATIONS,
    WHOLE_GROUP,
    class_family,
    subgroup,
)


def index_action(g: GroupElement, n: int) -> int:
    """The permutation action on the integer family indexing the odd
    maximal subgroups <(n, 1)>: g moves index n to (-1)**g.m * n + 2*g.n.
    The stabilizer of n is exactly <(n, 1)>."""
    return _sgn(g.m) * n + 2 * g.n


def index_stabilizer(n: int) -> CyclicSubgroup:
    return subgroup(n, 1)


def axis_projection(p: PlanePoint) -> Fraction:
    """Project the plane onto the vertical axis; intertwines the plane
    action with the shift action on the line."""
    return p.r


def shift_action(g: GroupElement, x: Fraction) -> Fraction:
    """The action on the horizontal piece's line: shift by g.m."""
    return g.m + x


def reflection_sign(g: GroupElement) -> int:
    """+1 for elements of the translation subgroup, -1 for glides."""
    return _sgn(g.m)


def _check_flat_rep(rep: CyclicSubgroup) -> tuple[int, int]:
    a, b = rep.gen.n, rep.gen.m
    if b == 0 or b % 2 or a == 0 or gcd(abs(a), b // 2) != 1:
        raise ValueError(
            "flat representative must have reduced form (n, 2m) with n, m nonzero"
        )
    return a, b


def line_quotient(rep: CyclicSubgroup, p: PlanePoint) -> Fraction:
    """Quotient of the plane by the line through rep's generator.

    The value (b*t - a*r)/2 vanishes exactly on that line, and the scale
    1/2 makes the translation subgroup hit every integer: a generator of
    the quotient of the translations by rep shifts the value by 1.
    """
    a, b = _check_flat_rep(rep)
    return (b * p.t - a * p.r) / 2


def quotient_shift(rep: CyclicSubgroup, g: GroupElement) -> int:
    """The integer by which a translation g shifts the quotient line.

    This is the quotient homomorphism of the translation subgroup by
    rep; it rejects glides (odd g.m), which act with a reflection.
    """
    a, b = _check_flat_rep(rep)
    if g.m % 2:
        raise ValueError("quotient shift defined on the translation subgroup only")
    val = b * g.n - a * g.m
    assert val % 2 == 0
    return val // 2


def flat_representatives(bound: int) -> list[CyclicSubgroup]:
    """Orbit representatives of the flat classes, one per reduced pair:
    generators (n, 2m) with 1 <= n, m <= bound and gcd(n, m) = 1, in
    lexicographic order of (n, m)."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return [
        CyclicSubgroup(GroupElement(n, 2 * m))
        for n in range(1, bound + 1)
        for m in range(1, bound + 1)
        if gcd(n, m) == 1
    ]


@dataclass(frozen=True)
class ModelPiece:
    label: str
    space: str
    cls: CommClass | None = None
    commensurator: Commensurator | None = None
    family: SubgroupFamily | None = None
    isotropy: CyclicSubgroup | None = None


@dataclass(frozen=True)
class ModelDescriptor:
    kind: str  # "pushout" or "join"
    base: str
    pieces: tuple[ModelPiece, ...]
    identifications: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("pushout", "join"):
            raise ValueError("unknown model kind")


def pushout_report(orbit_bound: int) -> ModelDescriptor:
    """The pushout model, truncated to the flat classes of bounded
    reduced generators.

    Always exactly one horizontal piece and one odd/vertical piece; the
    flat pieces enumerate :func:`flat_representatives`.
    """
    if orbit_bound < 0:
        raise ValueError("orbit_bound must be nonnegative")
    pieces = [
        ModelPiece(
            label="horizontal",
            space="real line with the shift action x -> g.m + x",
            cls=CommClass("H"),
            commensurator=WHOLE_GROUP,
            family=class_family(CommClass("H")),
        ),
        ModelPiece(
            label="odd-vertical",
            space="join of the integer family with the plane",
            cls=CommClass("K"),
            commensurator=WHOLE_GROUP,
            family=class_family(CommClass("K")),
        ),
    ]
    for rep in flat_representatives(orbit_bound):
        cls = CommClass("R", rep)
        pieces.append(
            ModelPiece(
                label=f"flat({rep.gen.n},{rep.gen.m})",
                space="real line, the plane modulo the representative direction",
                cls=cls,
                commensurator=TRANSLATIONS,
                family=class_family(cls),
            )
        )
    return ModelDescriptor(
        kind="pushout",
        base="plane",
        pieces=tuple(pieces),
        identifications=(
            "plane point x ~ axis_projection(x) in the horizontal piece",
            "plane point x ~ x inside the plane factor of the odd-vertical piece",
            "plane point x ~ [identity, line_quotient(rep, x)] in each flat piece",
        ),
    )


def join_report(slope_bound: int) -> ModelDescriptor:
    """The join model, truncated to slopes of height <= slope_bound:
    the plane joined with one line-of-lines per slope."""
    if slope_bound < 1:
        raise ValueError("slope_bound must be at least 1")
    pieces = []
    for a in _fraction_grid(slope_bound):
        pieces.append(
            ModelPiece(
                label=f"slope({a})",
                space="all lines of this slope, parametrized by intercept",
                isotropy=isotropy_group(Line(a, Fraction(0))),
            )
        )
    pieces.append(
        ModelPiece(
            label="slope(inf)",
            space="all vertical lines; isotropy depends on the intercept",
        )
    )
    return ModelDescriptor(
        kind="join",
        base="plane",
        pieces=tuple(pieces),
        identifications=("the model is the join of the base with every piece",),
    )


__all__ = [
    "ModelPiece",
    "ModelDescriptor",
    "index_action",
    "index_stabilizer",
    "axis_projection",
    "shift_action",
    "reflection_sign",
    "line_quotient",
    "quotient_shift",
    "flat_representatives",
    "pushout_report",
    "join_report",
]
