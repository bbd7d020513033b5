"""Abstract simplicial complexes: constructions and boundary matrices.

Vertices can be any mutually sortable hashable labels; constructions
that combine two complexes relabel to integers first.  Boundary
operators use the sorted vertex order, with the usual alternating
signs.
"""

from __future__ import annotations

from itertools import combinations

from .snf import IntMatrix


class SimplicialComplex:
    def __init__(self, simplices, *, closed: bool = False):
        """Build from an iterable of simplices (iterables of vertices).

        The downward closure is taken unless ``closed`` promises the
        input already contains every face.
        """
        faces: set[frozenset] = set()
        for s in simplices:
            f = frozenset(s)
            if not f:
                continue
            if len(f) != len(tuple(s)):
                raise ValueError(f"degenerate simplex {tuple(s)!r}")
            faces.add(f)
        if not closed:
            extra: set[frozenset] = set()
            for f in faces:
                for k in range(1, len(f)):
                    extra.update(frozenset(c) for c in combinations(f, k))
            faces |= extra
        by_dim: dict[int, list] = {}
        for f in faces:
            by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
        self._by_dim = [sorted(by_dim.get(d, [])) for d in range(max(by_dim, default=-1) + 1)]

    @property
    def dim(self) -> int:
        return len(self._by_dim) - 1

    @property
    def vertices(self) -> list:
        return [t[0] for t in self._by_dim[0]] if self._by_dim else []

    def simplices(self, d: int) -> list[tuple]:
        if 0 <= d < len(self._by_dim):
            return list(self._by_dim[d])
        return []

    def all_faces(self) -> list[tuple]:
        return [s for level in self._by_dim for s in level]

    def counts(self) -> list[int]:
        return [len(level) for level in self._by_dim]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(level) for d, level in enumerate(self._by_dim))

    def maximal_simplices(self) -> list[tuple]:
        facets: set[frozenset] = set()
        for d in range(1, self.dim + 1):
            for s in self._by_dim[d]:
                for k in range(len(s)):
                    facets.add(frozenset(s[:k] + s[k + 1 :]))
        return [s for level in self._by_dim for s in level if frozenset(s) not in facets]

    def boundary_matrices(self) -> list[IntMatrix]:
        """Matrices of the boundary operators, degree 1 up to the top.

        A 0-dimensional complex still reports one (vertices x 0) matrix
        so the chain carries its degree-0 dimension.
        """
        if not self._by_dim:
            raise ValueError("empty complex")
        if self.dim == 0:
            return [IntMatrix.zeros(len(self._by_dim[0]), 0)]
        out = []
        for d in range(1, self.dim + 1):
            index = {s: i for i, s in enumerate(self._by_dim[d - 1])}
            mat = IntMatrix.zeros(len(self._by_dim[d - 1]), len(self._by_dim[d]))
            for j, s in enumerate(self._by_dim[d]):
                for k in range(len(s)):
                    face = s[:k] + s[k + 1 :]
                    mat.data[index[face]][j] += (-1) ** k
            out.append(mat)
        return out

    def relabeled(self, offset: int = 0) -> "SimplicialComplex":
        """Same complex with vertices renamed 0.., in sorted label order."""
        names = {v: i + offset for i, v in enumerate(self.vertices)}
        return SimplicialComplex(
            [tuple(names[v] for v in s) for level in self._by_dim for s in level],
            closed=True,
        )

    def is_closed_surface(self) -> bool:
        """Every edge on two triangles and every vertex link one cycle."""
        if self.dim != 2:
            return False
        edge_count: dict[tuple, int] = {}
        for t in self._by_dim[2]:
            for e in combinations(t, 2):
                edge_count[e] = edge_count.get(e, 0) + 1
        if set(edge_count) != set(self._by_dim[1]):
            return False
        if any(c != 2 for c in edge_count.values()):
            return False
        for v in self.vertices:
            link = [tuple(x for x in t if x != v) for t in self._by_dim[2] if v in t]
            if not link:
                return False
            adj: dict = {}
            for a, b in link:
                adj.setdefault(a, set()).add(b)
                adj.setdefault(b, set()).add(a)
            if any(len(nbrs) != 2 for nbrs in adj.values()):
                return False
            seen = {link[0][0]}
            stack = [link[0][0]]
            while stack:
                for y in adj[stack.pop()]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(adj):
                return False
        return True


def disjoint_union(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    a = x.relabeled()
    b = y.relabeled(offset=len(x.vertices))
    return SimplicialComplex(a.all_faces() + b.all_faces(), closed=True)


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """The simplicial join: every union of a simplex from each side
    (either side may contribute nothing, but not both)."""
    a = x.relabeled()
    b = y.relabeled(offset=len(x.vertices))
    xs = [()] + a.all_faces()
    ys = [()] + b.all_faces()
    faces = [s + t for s in xs for t in ys if s or t]
    return SimplicialComplex(faces, closed=True)


def product(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """The ordered-product triangulation of |X| x |Y|.

    Vertices are pairs; the simplices over a cell sigma x tau are the
    monotone staircase chains from (min, min) to (max, max), one maximal
    simplex per interleaving of the two coordinate step sequences.
    """
    a = x.relabeled()
    b = y.relabeled()
    maximal = []
    for s in a.maximal_simplices():
        ns = len(s) - 1
        for t in b.maximal_simplices():
            nt = len(t) - 1
            for step_cols in combinations(range(ns + nt), ns):
                i = j = 0
                chain = [(s[0], t[0])]
                for pos in range(ns + nt):
                    if pos in step_cols:
                        i += 1
                    else:
                        j += 1
                    chain.append((s[i], t[j]))
                maximal.append(tuple(chain))
    return SimplicialComplex(maximal)


def point_complex() -> SimplicialComplex:
    return SimplicialComplex([(0,)], closed=True)


def circle_complex(segments: int = 3) -> SimplicialComplex:
    """A cycle with the given number of edges (at least 3)."""
    if segments < 3:
        raise ValueError("a simplicial circle needs at least 3 edges")
    return SimplicialComplex(
        [(i, (i + 1) % segments) for i in range(segments)]
    )


def disjoint_circles(count: int) -> SimplicialComplex:
    """A disjoint union of ``count`` triangles-as-circles."""
    if count < 1:
        raise ValueError("need at least one circle")
    edges = []
    for c in range(count):
        base = 3 * c
        edges += [(base, base + 1), (base + 1, base + 2), (base, base + 2)]
    return SimplicialComplex(edges)


# A 9-vertex triangulation of the Klein bottle: a 3x3 vertex grid on the
# square, top edge glued straight to the bottom, right edge glued to the
# left with a flip.  Vertex (column i, row j) is 3*i + j.  Validated in
# tests: Euler characteristic 0, closed-surface links, and homology
# (Z, Z + Z_2, 0).
KLEIN_TRIANGLES: tuple[tuple[int, int, int], ...] = (
    (0, 3, 4), (0, 1, 4), (1, 4, 5), (1, 2, 5), (2, 3, 5), (0, 2, 3),
    (3, 6, 7), (3, 4, 7), (4, 7, 8), (4, 5, 8), (5, 6, 8), (3, 5, 6),
    (0, 2, 6), (2, 6, 7), (1, 2, 7), (1, 7, 8), (0, 1, 8), (0, 6, 8),
)


def klein_complex() -> SimplicialComplex:
    return SimplicialComplex(KLEIN_TRIANGLES)


__all__ = [
    "SimplicialComplex",
    "KLEIN_TRIANGLES",
    "disjoint_union",
    "join",
    "product",
    "point_complex",
    "circle_complex",
    "disjoint_circles",
    "klein_complex",
]
