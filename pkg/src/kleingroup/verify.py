"""Exhaustive and randomized verification sweeps.

Each suite replays one of the library's structural claims against brute
force over a bounded grid and reports counterexamples instead of
raising, so the command line can print them.  The acceptance tests run
these same suites at their contractual bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import numpy as np

from .core import (
    AFFINE_IDENTITY,
    GroupElement,
    IDENTITY,
    as_affine,
    conj,
    inv,
    mul,
    power,
)
from .isotropy import (
    canonical_subgroups,
    fixed_set,
    isotropy_group,
    line_grid,
    verify_i_complex,
)
from .models import (
    flat_representatives,
    index_action,
    index_stabilizer,
    axis_projection,
    line_quotient,
    quotient_shift,
    shift_action,
)
from .plane import PlanePoint, act_line, act_point, stabilizes
from .subgroups import (
    CyclicSubgroup,
    canonicalize,
    comm_class,
    commensurable,
    conj_subgroup,
    contains,
    maximal_containing,
)


@dataclass
class SuiteReport:
    suite: str
    parameters: dict
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < 10:
            self.failures.append(msg)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "checks": self.checks,
            "failures": self.failures,
            "ok": self.ok,
        }


def _elements(bound: int) -> list[GroupElement]:
    return [
        GroupElement(n, m)
        for n in range(-bound, bound + 1)
        for m in range(-bound, bound + 1)
    ]


def _points(bound: int, max_denominator: int = 2) -> list[PlanePoint]:
    vals = sorted(
        {
            Fraction(p, q)
            for q in range(1, max_denominator + 1)
            for p in range(-bound, bound + 1)
        }
    )
    return [PlanePoint(t, r) for t in vals for r in vals]


def group_law_suite(bound: int = 10, samples: int = 10000, seed: int = 0) -> SuiteReport:
    """Associativity (vectorized sweep over the whole box), inverses,
    powers against iteration, conjugation against its definition, plus
    randomized triples with huge coordinates through the scalar code."""
    rep = SuiteReport("group-law", {"bound": bound, "samples": samples, "seed": seed})
    vals = [(n, m) for n in range(-bound, bound + 1) for m in range(-bound, bound + 1)]
    n_all = np.array([v[0] for v in vals], dtype=np.int64)
    m_all = np.array([v[1] for v in vals], dtype=np.int64)
    nh, mh = n_all[:, None], m_all[:, None]
    nk, mk = n_all[None, :], m_all[None, :]
    s_h = 1 - 2 * (mh & 1)
    n_hk = nh + s_h * nk
    m_hk = mh + mk
    for gn, gm in vals:
        sg = 1 - 2 * (gm & 1)
        n_gh = gn + sg * nh
        m_gh = gm + mh
        s_gh = 1 - 2 * (m_gh & 1)
        if not (
            np.array_equal(n_gh + s_gh * nk, gn + sg * n_hk)
            and np.array_equal(m_gh + mk, gm + m_hk)
        ):
            rep.fail(f"associativity broken somewhere at g=({gn},{gm})")
        rep.checks += len(vals) * len(vals)

    rng = random.Random(seed)
    elements = _elements(bound)
    # the vectorized law must be the scalar law
    for _ in range(500):
        g = rng.choice(elements)
        h = rng.choice(elements)
        p = mul(g, h)
        sg = 1 - 2 * (g.m & 1)
        if (p.n, p.m) != (g.n + sg * h.n, g.m + h.m):
            rep.fail(f"scalar/vector mismatch at {g}, {h}")
        rep.checks += 1

    for g in elements:
        rep.checks += 2
        if not mul(g, inv(g)).is_identity() or not mul(inv(g), g).is_identity():
            rep.fail(f"inverse law fails at {g}")
        if inv(inv(g)) != g:
            rep.fail(f"double inverse fails at {g}")
        acc = IDENTITY
        for k in range(13):
            if power(g, k) != acc:
                rep.fail(f"power {k} of {g} disagrees with iteration")
            if power(g, -k) != inv(acc):
                rep.fail(f"power {-k} of {g} disagrees with iteration")
            rep.checks += 2
            acc = mul(acc, g)

    for t in elements:
        ti = inv(t)
        for g in elements:
            if conj(t, g) != mul(mul(t, g), ti):
                rep.fail(f"conjugation closed form fails at t={t}, g={g}")
            rep.checks += 1

    big = 10**30
    for _ in range(samples):
        g, h, k = (
            GroupElement(rng.randint(-big, big), rng.randint(-big, big))
            for _ in range(3)
        )
        rep.checks += 3
        if mul(mul(g, h), k) != mul(g, mul(h, k)):
            rep.fail(f"big associativity fails at {g}, {h}, {k}")
        if not mul(g, inv(g)).is_identity():
            rep.fail(f"big inverse fails at {g}")
        if conj(g, h) != mul(mul(g, h), inv(g)):
            rep.fail(f"big conjugation fails at {g}, {h}")
        e = rng.randint(2, 40)
        if power(g, e) != reduce(mul, [g] * e):
            rep.fail(f"big power fails at {g}^{e}")
    return rep


def representation_suite(bound: int = 10) -> SuiteReport:
    """The affine representation is a homomorphism, matches the point
    action, and only the identity element acts as the identity map."""
    rep = SuiteReport("representation", {"bound": bound})
    elements = _elements(bound)
    maps = {g: as_affine(g) for g in elements}
    for g in elements:
        for h in elements:
            if maps[g].compose(maps[h]) != as_affine(mul(g, h)):
                rep.fail(f"not a homomorphism at {g}, {h}")
            rep.checks += 1
    pts = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(-2)), (Fraction(1, 2), Fraction(3, 7))]
    for g in elements:
        a = maps[g]
        if a.is_identity() != g.is_identity():
            rep.fail(f"faithfulness fails at {g}")
        for t, r in pts:
            q = act_point(g, PlanePoint(t, r))
            if a.apply(t, r) != (q.t, q.r):
                rep.fail(f"affine map disagrees with the action at {g}")
            rep.checks += 1
    if not AFFINE_IDENTITY.is_identity():
        rep.fail("identity map not recognized")
    return rep


def isotropy_suite(element_bound: int = 8, line_bound: int = 5) -> SuiteReport:
    """Galois duality: a bounded element stabilizes a bounded line
    exactly when the computed isotropy subgroup contains it, and the
    stabilization criterion matches actually moving the line."""
    rep = SuiteReport(
        "isotropy", {"element_bound": element_bound, "line_bound": line_bound}
    )
    elements = _elements(element_bound)
    for line in line_grid(line_bound):
        iso = isotropy_group(line)
        for g in elements:
            direct = act_line(g, line) == line
            crit = stabilizes(g, line)
            member = contains(iso, g)
            if crit != direct:
                rep.fail(f"criterion disagrees with action at g={g}, line={line}")
            if crit != member:
                rep.fail(f"isotropy membership wrong at g={g}, line={line}")
            rep.checks += 2
    return rep


def fixed_set_suite(gen_bound: int = 6, line_bound: int = 5) -> SuiteReport:
    """Fixed-set descriptors against brute-force stabilization, plus the
    structural sweep of verify_i_complex."""
    rep = SuiteReport("fixed-set", {"gen_bound": gen_bound, "line_bound": line_bound})
    lines = line_grid(line_bound)
    for s in canonical_subgroups(gen_bound):
        d = fixed_set(s)
        if d.kind == "empty":
            rep.fail(f"empty fixed set for {s}")
        for line in lines:
            if d.contains_line(line) != stabilizes(s.gen, line):
                rep.fail(f"fixed-set membership wrong at {s}, {line}")
            rep.checks += 1
    inner = verify_i_complex(gen_bound)
    rep.checks += inner.checks
    for c in inner.counterexamples:
        rep.fail(f"i-complex: {c}")
    return rep


def _mirror_powerset(pset: frozenset) -> frozenset:
    return frozenset((-n, m) for n, m in pset)


def commensurability_suite(bound: int = 10, power_bound: int = 24) -> SuiteReport:
    """Closed-form commensurability against the power-intersection
    oracle; class equality matches commensurability up to the flip;
    classes are conjugation invariant; membership matches enumeration."""
    rep = SuiteReport("commensurability", {"bound": bound, "power_bound": power_bound})
    subs = canonical_subgroups(bound)
    psets = []
    for s in subs:
        ps = set()
        for k in range(1, power_bound + 1):
            ps.add((power(s.gen, k).n, power(s.gen, k).m))
            ps.add((power(s.gen, -k).n, power(s.gen, -k).m))
        psets.append(frozenset(ps))
    classes = [comm_class(s) for s in subs]
    for i, s in enumerate(subs):
        for j in range(i, len(subs)):
            t = subs[j]
            oracle = not psets[i].isdisjoint(psets[j])
            rep.checks += 2
            if commensurable(s, t) != oracle:
                rep.fail(f"commensurable({s.gen}, {t.gen}) != oracle {oracle}")
            flip = oracle or not psets[i].isdisjoint(_mirror_powerset(psets[j]))
            if (classes[i] == classes[j]) != flip:
                rep.fail(f"class equality wrong at {s.gen}, {t.gen}")

    elements = _elements(6)
    for i, s in enumerate(subs):
        for g in elements:
            expected = g.is_identity() or (g.n, g.m) in psets[i]
            if contains(s, g) != expected:
                rep.fail(f"contains({s.gen}, {g}) != {expected}")
            rep.checks += 1

    conjugators = _elements(3)
    for s in subs:
        c = comm_class(s)
        m = maximal_containing(s)
        for t in conjugators:
            cs = conj_subgroup(t, s)
            rep.checks += 2
            if comm_class(cs) != c:
                rep.fail(f"class not conjugation invariant at t={t}, s={s.gen}")
            # conjugation is an automorphism, so it must carry the maximal
            # overgroup of s to the maximal overgroup of the conjugate
            if maximal_containing(cs) != conj_subgroup(t, m):
                rep.fail(f"maximal subgroup not equivariant at t={t}, s={s.gen}")
            if c.tag == "R" and t.m % 2 == 1:
                flipped = canonicalize(GroupElement(-m.gen.n, m.gen.m))
                if maximal_containing(cs) != flipped:
                    rep.fail(f"flat maximal did not flip at t={t}, s={s.gen}")
        if not contains(m, s.gen):
            rep.fail(f"maximal subgroup misses its member at {s.gen}")
    return rep


def kn_suite(bound: int = 8) -> SuiteReport:
    """The index action is an action and its stabilizers are exactly the
    odd maximal subgroups."""
    rep = SuiteReport("kn-action", {"bound": bound})
    elements = _elements(bound)
    indices = range(-bound, bound + 1)
    for n in indices:
        if index_action(IDENTITY, n) != n:
            rep.fail(f"identity moves index {n}")
        rep.checks += 1
    for g in elements:
        for h in elements:
            gh = mul(g, h)
            for n in indices:
                if index_action(g, index_action(h, n)) != index_action(gh, n):
                    rep.fail(f"not an action at g={g}, h={h}, n={n}")
            rep.checks += len(range(-bound, bound + 1))
    for g in elements:
        for n in indices:
            fixes = index_action(g, n) == n
            member = contains(index_stabilizer(n), g)
            if fixes != member:
                rep.fail(f"stabilizer wrong at g={g}, n={n}")
            rep.checks += 1
    return rep


def maps_suite(bound: int = 8, rep_bound: int = 3) -> SuiteReport:
    """Equivariance of the gluing maps: the axis projection intertwines
    the plane action with the shift action for every element, and each
    line quotient is translation-equivariant with kernel exactly its
    representative subgroup."""
    rep = SuiteReport("equivariant-maps", {"bound": bound, "rep_bound": rep_bound})
    elements = _elements(bound)
    pts = _points(2)
    for g in elements:
        for x in pts:
            if axis_projection(act_point(g, x)) != shift_action(g, axis_projection(x)):
                rep.fail(f"axis projection not equivariant at {g}, {x}")
            rep.checks += 1
    translations = [g for g in elements if g.m % 2 == 0]
    for r in flat_representatives(rep_bound):
        values = set()
        for g in translations:
            shift = quotient_shift(r, g)
            values.add(shift)
            rep.checks += 2
            if (shift == 0) != contains(r, g):
                rep.fail(f"quotient kernel wrong at rep={r.gen}, g={g}")
            for x in pts[:9]:
                if line_quotient(r, act_point(g, x)) != shift + line_quotient(r, x):
                    rep.fail(f"line quotient not equivariant at rep={r.gen}, g={g}")
                rep.checks += 1
        if 1 not in values:
            rep.fail(f"quotient by {r.gen} misses the unit shift")
    return rep


def i_complex_suite(bound: int = 6) -> SuiteReport:
    inner = verify_i_complex(bound)
    rep = SuiteReport("i-complex", {"bound": bound}, checks=inner.checks)
    for c in inner.counterexamples:
        rep.fail(c)
    return rep


SUITES = {
    "group-law": group_law_suite,
    "representation": representation_suite,
    "isotropy": isotropy_suite,
    "fixed-set": fixed_set_suite,
    "commensurability": commensurability_suite,
    "kn-action": kn_suite,
    "equivariant-maps": maps_suite,
    "i-complex": i_complex_suite,
}


def run_suite(name: str, bound: int | None = None, seed: int = 0,
              max_denominator: int | None = None) -> SuiteReport:
    """Dispatch a named suite with its contractual default bounds unless
    overridden."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    kwargs: dict = {}
    if name == "group-law":
        kwargs["seed"] = seed
        if bound is not None:
            kwargs["bound"] = bound
    elif name in ("representation", "i-complex"):
        if bound is not None:
            kwargs["bound"] = bound
    elif name == "isotropy":
        if bound is not None:
            kwargs["element_bound"] = bound
        if max_denominator is not None:
            kwargs["line_bound"] = max_denominator
    elif name == "fixed-set":
        if bound is not None:
            kwargs["gen_bound"] = bound
        if max_denominator is not None:
            kwargs["line_bound"] = max_denominator
    elif name == "commensurability":
        if bound is not None:
            kwargs["bound"] = bound
    elif name in ("kn-action", "equivariant-maps"):
        if bound is not None:
            kwargs["bound"] = bound
    return SUITES[name](**kwargs)


__all__ = ["SuiteReport", "SUITES", "run_suite"] + [
    f.__name__ for f in SUITES.values()
]
