"""Index action, gluing maps, flat representatives, model reports."""

from fractions import Fraction

import pytest

from kleingroup import (
    GroupElement,
    IDENTITY,
    PlanePoint,
    act_point,
    axis_projection,
    conj_subgroup,
    contains,
    flat_representatives,
    index_action,
    index_stabilizer,
    inv,
    join_report,
    line_quotient,
    mul,
    pushout_report,
    quotient_shift,
    shift_action,
    subgroup,
)
from kleingroup.models import reflection_sign

ELEMS = [GroupElement(n, m) for n in range(-6, 7) for m in range(-6, 7)]


def test_index_action_examples():
    assert index_action(GroupElement(2, 1), 5) == -1
    assert index_action(GroupElement(1, 0), 0) == 2
    assert index_action(GroupElement(0, 2), 7) == 7
    assert index_action(IDENTITY, 3) == 3


def test_index_action_is_action():
    for g in ELEMS[:60]:
        for h in ELEMS[:60]:
            gh = mul(g, h)
            for n in (-3, 0, 4):
                assert index_action(g, index_action(h, n)) == index_action(gh, n)


def test_index_action_is_by_bijections():
    for g in ELEMS:
        imgs = {index_action(g, n) for n in range(-8, 9)}
        assert len(imgs) == 17
        for n in range(-8, 9):
            assert index_action(inv(g), index_action(g, n)) == n


def test_index_stabilizer():
    for n in range(-6, 7):
        stab = index_stabilizer(n)
        assert stab == subgroup(n, 1)
        for g in ELEMS:
            assert (index_action(g, n) == n) == contains(stab, g), (g, n)


def test_index_orbits_are_parity_classes():
    # 2*g.n shifts by even amounts and the sign flip preserves parity
    for g in ELEMS:
        for n in range(-4, 5):
            assert (index_action(g, n) - n) % 2 == 0


def test_axis_projection_equivariance():
    pts = [PlanePoint(Fraction(p, 2), Fraction(q, 3))
           for p in range(-4, 5) for q in range(-4, 5)]
    for g in ELEMS:
        for x in pts[:30]:
            assert axis_projection(act_point(g, x)) == \
                shift_action(g, axis_projection(x))


def test_reflection_sign():
    assert reflection_sign(GroupElement(3, 2)) == 1
    assert reflection_sign(GroupElement(3, -1)) == -1


def test_line_quotient_values():
    rep = subgroup(1, 2)
    assert line_quotient(rep, PlanePoint(Fraction(0), Fraction(2))) == -1
    assert line_quotient(rep, PlanePoint(Fraction(1), Fraction(2))) == 0
    assert line_quotient(rep, PlanePoint(Fraction(1, 2), Fraction(1))) == 0
    assert line_quotient(rep, PlanePoint(Fraction(0), Fraction(0))) == 0
    assert line_quotient(subgroup(3, 4), PlanePoint(Fraction(1), Fraction(1))) == \
        Fraction(1, 2)


def test_line_quotient_vanishes_exactly_on_the_line():
    rep = subgroup(2, 6)  # reduced: gcd(2, 3) = 1
    for k in range(-3, 4):
        p = PlanePoint(Fraction(2 * k), Fraction(6 * k))
        assert line_quotient(rep, p) == 0
    assert line_quotient(rep, PlanePoint(Fraction(1), Fraction(0))) != 0


def test_quotient_shift_is_the_cokernel_map():
    rep = subgroup(1, 2)
    translations = [g for g in ELEMS if g.m % 2 == 0]
    values = set()
    for g in translations:
        s = quotient_shift(rep, g)
        values.add(s)
        assert (s == 0) == contains(rep, g), g
        # equivariance: the quotient intertwines translation with shift by s
        p = PlanePoint(Fraction(1, 3), Fraction(5))
        assert line_quotient(rep, act_point(g, p)) == s + line_quotient(rep, p)
    assert 1 in values and -1 in values


def test_quotient_shift_rejects_glides():
    with pytest.raises(ValueError, match="translation"):
        quotient_shift(subgroup(1, 2), GroupElement(0, 1))


def test_flat_rep_validation():
    with pytest.raises(ValueError, match="reduced form"):
        line_quotient(subgroup(2, 4), PlanePoint(Fraction(0), Fraction(0)))
    with pytest.raises(ValueError, match="reduced form"):
        line_quotient(subgroup(1, 0), PlanePoint(Fraction(0), Fraction(0)))
    with pytest.raises(ValueError, match="reduced form"):
        line_quotient(subgroup(3, 1), PlanePoint(Fraction(0), Fraction(0)))
    with pytest.raises(ValueError, match="reduced form"):
        line_quotient(subgroup(0, 2), PlanePoint(Fraction(0), Fraction(0)))


def test_flat_representatives_lists():
    assert [r.gen for r in flat_representatives(1)] == [GroupElement(1, 2)]
    assert [r.gen for r in flat_representatives(2)] == [
        GroupElement(1, 2), GroupElement(1, 4), GroupElement(2, 2),
    ]
    got3 = [r.gen for r in flat_representatives(3)]
    assert got3 == [
        GroupElement(1, 2), GroupElement(1, 4), GroupElement(1, 6),
        GroupElement(2, 2), GroupElement(2, 6),
        GroupElement(3, 2), GroupElement(3, 4),
    ]
    assert flat_representatives(0) == []


def test_flat_representatives_hit_every_r_class_once():
    # every R class with a bounded reduced generator appears exactly once
    from kleingroup import comm_class
    reps = flat_representatives(4)
    classes = [comm_class(r) for r in reps]
    assert len(set(classes)) == len(classes)
    for n in range(1, 5):
        for m in range(1, 5):
            c = comm_class(subgroup(n, 2 * m))
            assert c in classes


def test_pushout_report_census():
    d = pushout_report(2)
    assert d.kind == "pushout" and d.base == "plane"
    labels = [p.label for p in d.pieces]
    assert labels[0] == "horizontal" and labels[1] == "odd-vertical"
    assert labels[2:] == ["flat(1,2)", "flat(1,4)", "flat(2,2)"]
    tags = [p.cls.tag for p in d.pieces]
    assert tags.count("H") == 1 and tags.count("K") == 1 and tags.count("R") == 3
    kinds = {p.label: p.commensurator.kind for p in d.pieces}
    assert kinds["horizontal"] == "whole-group"
    assert kinds["odd-vertical"] == "whole-group"
    assert kinds["flat(1,2)"] == "translation-subgroup"
    assert len(d.identifications) == 3


def test_pushout_report_families_are_disjoint():
    d = pushout_report(3)
    flats = [p for p in d.pieces if p.cls.tag == "R"]
    from kleingroup import family_contains
    for i, a in enumerate(flats):
        for b in flats[i + 1:]:
            assert not family_contains(a.family, b.cls.rep)


def test_join_report_pieces():
    d = join_report(1)
    assert d.kind == "join"
    labels = [p.label for p in d.pieces]
    assert labels == ["slope(-1)", "slope(0)", "slope(1)", "slope(inf)"]
    by_label = {p.label: p for p in d.pieces}
    assert by_label["slope(0)"].isotropy == subgroup(1, 0)
    assert by_label["slope(1)"].isotropy == subgroup(2, 2)
    assert by_label["slope(inf)"].isotropy is None


def test_join_report_isotropy_matches_case_table():
    d = join_report(3)
    for p in d.pieces:
        if p.isotropy is None:
            continue
        a = Fraction(p.label[len("slope("):-1])
        gen = p.isotropy.gen
        if a == 0:
            assert gen == GroupElement(1, 0)
        elif a.numerator % 2 == 0:
            assert Fraction(gen.m, gen.n) == a and gen.m % 2 == 0
        else:
            assert Fraction(gen.m, gen.n) == a and gen.m % 4 == 2


def test_report_bound_validation():
    with pytest.raises(ValueError):
        pushout_report(-1)
    with pytest.raises(ValueError):
        join_report(0)
