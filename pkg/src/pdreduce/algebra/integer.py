"""Exact integer matrices and Smith normal form.

Python ints are arbitrary precision, so nothing here can overflow.
``smith_normal_form`` is the dense, certificate-producing routine used for
small matrices and in tests; ``invariant_factors`` handles the large sparse
boundary matrices by eliminating unit pivots first and only then handing the
(small) remainder to the dense routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence


class IntMatrix:
    """Sparse integer matrix stored by columns (``{row: value}`` per column)."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[dict[int, int]]):
        if len(cols) != ncols:
            raise ValueError("column count does not match ncols")
        self.nrows = nrows
        self.ncols = ncols
        self.cols = tuple({i: v for i, v in sorted(c.items()) if v} for c in cols)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        cols = [{i: data[i][j] for i in range(nrows) if data[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.cols[j].get(i, 0)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.cols))})"

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def transpose(self) -> "IntMatrix":
        rows: list[dict[int, int]] = [{} for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                rows[i][j] = v
        return IntMatrix(self.ncols, self.nrows, rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for c in other.cols:
            acc: dict[int, int] = {}
            for k, b in c.items():
                for i, a in self.cols[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            out.append(acc)
        return IntMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def mod2_columns(self) -> list[int]:
        return [sum(1 << i for i, v in c.items() if v & 1) for c in self.cols]


@dataclass(frozen=True)
class SmithForm:
    """Result of ``smith_normal_form``: ``U @ A @ V == D``."""

    factors: tuple[int, ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.factors)


def _matmul(a, b):
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(ncols)]
            for i in range(len(a))]


def smith_normal_form(A) -> SmithForm:
    """Smith normal form with unimodular certificate matrices.

    ``A`` may be an ``IntMatrix`` or a list of rows.  Returns the nonzero
    invariant factors (positive, each dividing the next) and ``U``, ``V``
    with ``U A V = D``.
    """
    if isinstance(A, IntMatrix):
        A = A.to_dense()
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        if k:
            M[dst] = [x + k * y for x, y in zip(M[dst], M[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        if k:
            for row in M:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(t, i, -(M[i][t] // M[t][t]))
                    if M[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(t, j, -(M[t][j] // M[t][t]))
                    if M[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if M[i][j] % M[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(M[i][i] for i in range(t))
    return SmithForm(
        factors=factors,
        U=tuple(map(tuple, U)),
        V=tuple(map(tuple, V)),
        D=tuple(map(tuple, M)),
    )


def determinant(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in M]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def invariant_factors(A: IntMatrix) -> tuple[int, ...]:
    """Nonzero invariant factors of a sparse integer matrix (no certificate).

    Unit pivots are eliminated first, sweeping columns shortest-first and
    taking the +-1 entry in the shortest row; each such step contributes a
    factor 1 and replaces the matrix by its Schur complement.  Whatever is left has
    no unit entries and goes through the dense routine.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for j, c in enumerate(A.cols):
        if c:
            cols[j] = dict(c)
            for i, v in c.items():
                rows.setdefault(i, {})[j] = v

    units = 0
    progress = True
    while progress:
        progress = False
        for pj in sorted(cols, key=lambda j: (len(cols[j]), j)):
            col = cols.get(pj)
            if not col:
                continue
            pi = None
            for i, v in col.items():
                if (v == 1 or v == -1) and (pi is None or len(rows[i]) < len(rows[pi])):
                    pi = i
            if pi is None:
                continue
            _eliminate(rows, cols, pi, pj)
            units += 1
            progress = True

    if not cols:
        return (1,) * units
    ri = sorted(rows)
    cj = sorted(cols)
    rpos = {i: k for k, i in enumerate(ri)}
    dense = [[0] * len(cj) for _ in ri]
    for k, j in enumerate(cj):
        for i, v in cols[j].items():
            dense[rpos[i]][k] = v
    rest = smith_normal_form(dense).factors
    return (1,) * units + rest


def _eliminate(rows, cols, pi, pj):
    """Pivot on the unit entry ``(pi, pj)`` and replace by the Schur complement."""
    pv = rows[pi][pj]
    prow = rows.pop(pi)
    pcol = cols.pop(pj)
    del prow[pj]
    del pcol[pi]
    for j in prow:
        del cols[j][pi]
    for i in pcol:
        del rows[i][pj]
    for i, a in pcol.items():
        row_i = rows[i]
        f = a * pv  # a / pv since pv is +-1
        for j, b in prow.items():
            nv = row_i.get(j, 0) - f * b
            if nv:
                row_i[j] = nv
                cols[j][i] = nv
            else:
                row_i.pop(j, None)
                cols[j].pop(i, None)
    for i in pcol:
        if not rows[i]:
            del rows[i]
    for j in prow:
        if not cols[j]:
            del cols[j]


def rank(A: IntMatrix) -> int:
    return len(invariant_factors(A))


def gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
