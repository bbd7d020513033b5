"""Exact integer matrices and Smith normal form.

Entries are Python ints, so nothing overflows.  The reduction keeps a
sparse view of the matrix and always pivots on a smallest-magnitude
entry, which bounds coefficient growth on the matrices that show up
here (boundary operators, mostly +-1 entries).
"""

from __future__ import annotations

from collections import defaultdict


class IntMatrix:
    """A dense rows x cols integer matrix."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data, ncols: int | None = None):
        self.data = [list(row) for row in data]
        self.nrows = len(self.data)
        if self.nrows:
            widths = {len(r) for r in self.data}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols disagrees with data")
        else:
            self.ncols = 0 if ncols is None else ncols
        for row in self.data:
            for v in row:
                if not isinstance(v, int):
                    raise TypeError("entries must be ints")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"IntMatrix({self.data!r})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = IntMatrix.zeros(self.nrows, other.ncols)
        for i, row in enumerate(self.data):
            acc = out.data[i]
            for k, a in enumerate(row):
                if a:
                    brow = other.data[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] += a * b
        return out

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.data for v in row)


def _factor(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here are small)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factor_chain(moduli: list[int]) -> list[int]:
    """Sort a list of moduli (each >= 1) into a divisibility chain d1|d2|...

    The chain presents the same group Z/d1 + Z/d2 + ...; largest prime
    powers sink to the end.

    >>> invariant_factor_chain([2, 3])
    [1, 6]
    >>> invariant_factor_chain([4, 6])
    [2, 12]
    """
    r = len(moduli)
    exps: dict[int, list[int]] = defaultdict(list)
    for d in moduli:
        if d < 1:
            raise ValueError("moduli must be positive")
        for p, e in _factor(d).items():
            exps[p].append(e)
    chain = [1] * r
    for p, es in exps.items():
        es.sort()
        for offset, e in enumerate(es):
            chain[r - len(es) + offset] *= p**e
    return chain


def _round_div(a: int, p: int) -> int:
    # quotient q minimizing |a - q*p|, for p > 0
    q, r = divmod(a, p)
    if 2 * r > p:
        q += 1
    return q


def _diagonal_moduli(m: IntMatrix) -> list[int]:
    """Diagonalize by unimodular row/column operations; return the
    positive diagonal entries (not yet chained)."""
    rows: dict[int, dict[int, int]] = {}
    for i, row in enumerate(m.data):
        r = {j: v for j, v in enumerate(row) if v}
        if r:
            rows[i] = r
    cols: dict[int, set[int]] = defaultdict(set)
    for i, r in rows.items():
        for j in r:
            cols[j].add(i)

    def add_row(dst: int, src: int, c: int) -> None:
        # row[dst] += c * row[src]
        target = rows.setdefault(dst, {})
        for j, v in rows[src].items():
            new = target.get(j, 0) + c * v
            if new:
                target[j] = new
                cols[j].add(dst)
            elif j in target:
                del target[j]
                cols[j].discard(dst)
        if not target:
            del rows[dst]

    def add_col(dst: int, src: int, c: int) -> None:
        # col[dst] += c * col[src]
        for i in list(cols[src]):
            v = rows[i][src]
            new = rows[i].get(dst, 0) + c * v
            if new:
                rows[i][dst] = new
                cols[dst].add(i)
            elif dst in rows[i]:
                del rows[i][dst]
                cols[dst].discard(i)

    moduli: list[int] = []
    while rows:
        pi, pj = min(
            ((i, j) for i, r in rows.items() for j in r),
            key=lambda t: abs(rows[t[0]][t[1]]),
        )
        while True:
            if rows[pi][pj] < 0:
                for j in list(rows[pi]):
                    rows[pi][j] = -rows[pi][j]
            p = rows[pi][pj]
            moved = False
            for i in list(cols[pj]):
                if i == pi or i not in rows or pj not in rows[i]:
                    continue
                q = _round_div(rows[i][pj], p)
                if q:
                    add_row(i, pi, -q)
                if i in rows and rows[i].get(pj):
                    pi = i  # strictly smaller remainder takes over as pivot
                    moved = True
                    break
            if moved:
                continue
            p = rows[pi][pj]
            for j in list(rows[pi]):
                if j == pj:
                    continue
                q = _round_div(rows[pi][j], p)
                if q:
                    add_col(j, pj, -q)
                if rows[pi].get(j):
                    pj = j
                    moved = True
                    break
            if moved:
                continue
            break
        moduli.append(rows[pi][pj])
        del rows[pi]
        cols[pj].discard(pi)
    return moduli


def smith_normal_form(m: IntMatrix) -> tuple[list[int], int]:
    """Invariant factors (the nonzero SNF diagonal, each dividing the
    next) and the rank.

    >>> smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    ([1, 6], 2)
    >>> smith_normal_form(IntMatrix.zeros(3, 2))
    ([], 0)
    """
    moduli = _diagonal_moduli(m)
    return invariant_factor_chain(moduli), len(moduli)


__all__ = ["IntMatrix", "smith_normal_form", "invariant_factor_chain"]
