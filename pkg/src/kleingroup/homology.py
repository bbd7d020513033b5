"""Integral homology of chain complexes, with Kunneth assembly.

Ranks and torsion come from Smith normal form of the boundary
operators.  Homology of a product is assembled from the factors by the
Kunneth formula; homology of a join by its reduced variant, one degree
up.  The two routes are kept independent so they can check each other.
"""

from __future__ import annotations

from .abelian import TRIVIAL, AbelianGroup, GradedGroups, Z
from .simplicial import SimplicialComplex, disjoint_circles, join, klein_complex
from .snf import IntMatrix, smith_normal_form


def homology_of_chain(boundaries: list[IntMatrix], reduced: bool = False) -> GradedGroups:
    """Homology of a chain complex given by its boundary matrices.

    ``boundaries[k]`` is the matrix of the boundary from degree k+1 to
    degree k (so a 0-dimensional complex passes one (vertices x 0)
    matrix).  Rejects mismatched shapes and nonzero double boundaries.
    """
    if not boundaries:
        raise ValueError("need at least one boundary matrix")
    for a, b in zip(boundaries, boundaries[1:]):
        if a.ncols != b.nrows:
            raise ValueError("boundary shapes do not chain")
        if not (a @ b).is_zero():
            raise ValueError("double boundary is nonzero")
    dims = [boundaries[0].nrows] + [b.ncols for b in boundaries]
    forms = [smith_normal_form(b) for b in boundaries]
    ranks = [0] + [rank for _, rank in forms] + [0]
    groups = []
    for n, dim in enumerate(dims):
        free = dim - ranks[n] - ranks[n + 1]
        if free < 0:
            raise ValueError("boundary ranks exceed chain dimension")
        torsion = []
        if n < len(forms):
            torsion = [d for d in forms[n][0] if d > 1]
        groups.append(AbelianGroup.from_moduli(free, torsion))
    out = GradedGroups(tuple(groups))
    return out.to_reduced() if reduced else out


def simplicial_homology(x: SimplicialComplex, reduced: bool = False) -> GradedGroups:
    """
    >>> simplicial_homology(klein_complex()).text()
    'H_0 = Z, H_1 = Z + Z_2'
    """
    return homology_of_chain(x.boundary_matrices(), reduced=reduced)


def kunneth_product(hx: GradedGroups, hy: GradedGroups) -> GradedGroups:
    """Homology of a product space from unreduced factor homologies:
    tensor terms in the same total degree plus Tor terms one below."""
    if hx.reduced or hy.reduced:
        raise ValueError("kunneth_product takes unreduced homologies")
    top = hx.top_degree + hy.top_degree + 1
    groups = []
    for n in range(top + 1):
        acc = TRIVIAL
        for i in range(n + 1):
            acc = acc.direct_sum(hx[i].tensor(hy[n - i]))
        for i in range(n):
            acc = acc.direct_sum(hx[i].tor(hy[n - 1 - i]))
        groups.append(acc)
    return GradedGroups(tuple(groups))


def kunneth_join(hx: GradedGroups, hy: GradedGroups) -> GradedGroups:
    """Reduced homology of a join from reduced factor homologies.

    Degree n+1 of the join collects the degree-n tensor terms and the
    degree-(n-1) Tor terms; a join of nonempty spaces is connected, so
    degree 0 vanishes.
    """
    if not (hx.reduced and hy.reduced):
        raise ValueError("kunneth_join takes reduced homologies")
    top = hx.top_degree + hy.top_degree + 2
    groups = [TRIVIAL]
    for m in range(1, top + 1):
        n = m - 1
        acc = TRIVIAL
        for i in range(n + 1):
            acc = acc.direct_sum(hx[i].tensor(hy[n - i]))
        for i in range(n):
            acc = acc.direct_sum(hx[i].tor(hy[n - 1 - i]))
        groups.append(acc)
    return GradedGroups(tuple(groups), reduced=True)


def join_sequence_check(hx: GradedGroups, hy: GradedGroups) -> list[dict]:
    """Consistency of the join against the product, degree by degree.

    The join, the product and the wedge-like sum of the factors sit in a
    short exact sequence; in each degree n >= 1 the reduced groups must
    satisfy join(n+1) + (X(n) + Y(n)) = product(n), which pins the rank
    of the join by subtraction.  Returns one record per degree.
    """
    if not (hx.reduced and hy.reduced):
        raise ValueError("join_sequence_check takes reduced homologies")
    hj = kunneth_join(hx, hy)
    hprod = kunneth_product(hx.to_unreduced(), hy.to_unreduced()).to_reduced()
    out = []
    for n in range(1, max(hj.top_degree, hprod.top_degree + 1) + 1):
        ends = hx[n].direct_sum(hy[n])
        out.append(
            {
                "degree": n,
                "rank_ok": hj[n + 1].rank == hprod[n].rank - ends.rank,
                "split_ok": hj[n + 1].direct_sum(ends) == hprod[n],
            }
        )
    return out


SIMPLICIAL_CAP = 4


def model_homology(circles: int, method: str = "kunneth") -> GradedGroups:
    """Unreduced homology of the truncated second model: the join of
    ``circles`` disjoint circles with the Klein bottle.

    method "kunneth" assembles it from the factor homologies; method
    "simplicial" triangulates the join and runs the boundary matrices
    (capped at {cap} circles to keep matrix sizes sane).
    """
    if circles < 1:
        raise ValueError("need at least one circle")
    if method == "kunneth":
        hx = simplicial_homology(disjoint_circles(circles), reduced=True)
        hk = simplicial_homology(klein_complex(), reduced=True)
        return kunneth_join(hx, hk).to_unreduced()
    if method == "simplicial":
        if circles > SIMPLICIAL_CAP:
            raise ValueError(f"simplicial method capped at {SIMPLICIAL_CAP} circles")
        return simplicial_homology(join(disjoint_circles(circles), klein_complex()))
    raise ValueError("method must be 'kunneth' or 'simplicial'")


model_homology.__doc__ = model_homology.__doc__.format(cap=SIMPLICIAL_CAP)


__all__ = [
    "homology_of_chain",
    "simplicial_homology",
    "kunneth_product",
    "kunneth_join",
    "join_sequence_check",
    "model_homology",
    "SIMPLICIAL_CAP",
]
