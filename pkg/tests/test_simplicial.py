"""Complex constructions: closure, joins, products, the Klein surface."""

import pytest

from kleingroup import (
    KLEIN_TRIANGLES,
    SimplicialComplex,
    circle_complex,
    disjoint_circles,
    disjoint_union,
    join,
    klein_complex,
    point_complex,
    product,
)


def test_downward_closure():
    x = SimplicialComplex([(0, 1, 2)])
    assert x.counts() == [3, 3, 1]
    assert x.simplices(1) == [(0, 1), (0, 2), (1, 2)]
    assert x.dim == 2


def test_closed_flag_trusts_input():
    x = SimplicialComplex([(0,), (1,), (0, 1)], closed=True)
    assert x.counts() == [2, 1]


def test_degenerate_rejected():
    with pytest.raises(ValueError, match="degenerate"):
        SimplicialComplex([(0, 0, 1)])


def test_maximal_simplices():
    x = SimplicialComplex([(0, 1, 2), (2, 3)])
    assert set(x.maximal_simplices()) == {(0, 1, 2), (2, 3)}


def test_point_and_circle():
    assert point_complex().counts() == [1]
    c = circle_complex()
    assert c.counts() == [3, 3]
    assert c.euler_characteristic() == 0
    assert circle_complex(7).counts() == [7, 7]
    with pytest.raises(ValueError):
        circle_complex(2)


def test_disjoint_circles():
    d = disjoint_circles(3)
    assert d.counts() == [9, 9]
    with pytest.raises(ValueError):
        disjoint_circles(0)


def test_disjoint_union_counts():
    u = disjoint_union(circle_complex(), circle_complex(4))
    assert u.counts() == [7, 7]


def test_boundary_squares_to_zero():
    for x in (circle_complex(), klein_complex(),
              product(circle_complex(3), circle_complex(3)),
              join(circle_complex(3), point_complex())):
        mats = x.boundary_matrices()
        for a, b in zip(mats, mats[1:]):
            assert (a @ b).is_zero()


def test_boundary_shapes_follow_counts():
    x = klein_complex()
    counts = x.counts()
    mats = x.boundary_matrices()
    assert len(mats) == x.dim
    for d, mat in enumerate(mats, start=1):
        assert (mat.nrows, mat.ncols) == (counts[d - 1], counts[d])


def test_zero_dimensional_boundary_convention():
    mats = point_complex().boundary_matrices()
    assert len(mats) == 1
    assert (mats[0].nrows, mats[0].ncols) == (1, 0)


def test_klein_surface_structure():
    k = klein_complex()
    assert len(KLEIN_TRIANGLES) == 18
    assert k.counts() == [9, 27, 18]
    assert k.euler_characteristic() == 0
    assert k.is_closed_surface()


def test_klein_triangles_have_no_repeats():
    assert len(set(map(frozenset, KLEIN_TRIANGLES))) == 18


def test_circle_is_not_a_surface():
    assert not circle_complex().is_closed_surface()
    # a triangle disc has boundary edges on one triangle only
    assert not SimplicialComplex([(0, 1, 2)]).is_closed_surface()


def test_torus_product_structure():
    t = product(circle_complex(3), circle_complex(3))
    assert t.euler_characteristic() == 0
    assert t.is_closed_surface()
    assert t.counts()[0] == 9


def test_product_of_segments():
    seg = SimplicialComplex([(0, 1)])
    sq = product(seg, seg)
    # a square: 4 vertices, 5 edges, 2 triangles
    assert sq.counts() == [4, 5, 2]
    assert sq.euler_characteristic() == 1


def test_product_with_point_is_identity_up_to_names():
    c = circle_complex(5)
    p = product(c, point_complex())
    assert p.counts() == c.counts()


def test_join_with_point_is_cone():
    cone = join(circle_complex(3), point_complex())
    # cone on a triangle boundary: a solid-looking disc
    assert cone.euler_characteristic() == 1
    assert cone.counts() == [4, 6, 3]


def test_join_of_circles_counts():
    j = join(circle_complex(3), circle_complex(3))
    # all cross simplices exist: S1 * S1 = S3
    assert j.counts() == [6, 6 + 9, 2 * 9, 9]
    assert j.euler_characteristic() == 0


def test_join_dimension():
    assert join(circle_complex(3), klein_complex()).dim == 4
    assert join(point_complex(), point_complex()).dim == 1


def test_relabeled_preserves_structure():
    k = klein_complex()
    r = k.relabeled(offset=100)
    assert r.counts() == k.counts()
    assert min(r.vertices) == 100
    assert r.euler_characteristic() == 0


def test_mixed_label_types():
    x = SimplicialComplex([("a", "b"), ("b", "c"), ("a", "c")])
    assert x.counts() == [3, 3]
    assert x.vertices == ["a", "b", "c"]
