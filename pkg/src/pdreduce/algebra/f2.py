"""Linear algebra over F2 with rows packed into Python ints.

Bit ``j`` of a row is the entry in column ``j``.  Pivots are always the
lowest set bit (the leftmost column when a row is printed left to right)
and rows are consumed top to bottom, so every reduction here is
deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def lowbit(v: int) -> int:
    return (v & -v).bit_length() - 1


def bits(v: int):
    """Yield the set bit positions of ``v`` in increasing order."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def popcount(v: int) -> int:
    return bin(v).count("1")


def parity(v: int) -> int:
    return popcount(v) & 1


def vector(entries: Iterable[int]) -> int:
    """Pack a 0/1 sequence into an int."""
    out = 0
    for j, e in enumerate(entries):
        if e & 1:
            out |= 1 << j
    return out


def unpack(v: int, length: int) -> tuple[int, ...]:
    return tuple((v >> j) & 1 for j in range(length))


class F2Matrix:
    """Immutable dense matrix over F2."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        if len(rows) != nrows:
            raise ValueError("row count does not match nrows")
        mask = (1 << ncols) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row has bits beyond ncols")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls(nrows, ncols, [0] * nrows)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "F2Matrix":
        if ncols is None:
            ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, [vector(r) for r in data])

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int]) -> "F2Matrix":
        return cls(len(columns), nrows, columns).transpose()

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def __eq__(self, other):
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return f"F2Matrix({self.nrows}x{self.ncols}, rank={self.rank()})"

    def to_lists(self) -> list[list[int]]:
        return [list(unpack(r, self.ncols)) for r in self.rows]

    def columns(self) -> list[int]:
        return list(self.transpose().rows)

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bit = 1 << i
            for j in bits(r):
                cols[j] |= bit
        return F2Matrix(self.ncols, self.nrows, cols)

    def apply(self, v: int) -> int:
        """Matrix times column vector ``v`` (packed over the columns)."""
        out = 0
        for i, r in enumerate(self.rows):
            if parity(r & v):
                out |= 1 << i
        return out

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.rows:
            acc = 0
            for j in bits(r):
                acc ^= other.rows[j]
            out.append(acc)
        return F2Matrix(self.nrows, other.ncols, out)

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return F2Matrix(self.nrows, self.ncols, [a ^ b for a, b in zip(self.rows, other.rows)])

    def is_zero(self) -> bool:
        return not any(self.rows)

    def rank(self) -> int:
        return len(echelon(self.rows))

    def rref(self) -> dict[int, int]:
        """Reduced row echelon form as ``{pivot column: row}``."""
        return reduce_fully(echelon(self.rows))

    def kernel(self) -> list[int]:
        """Basis of ``{x : M x = 0}``, one vector per free column, in column order."""
        piv = self.rref()
        pivots = 0
        for p in piv:
            pivots |= 1 << p
        free_mask = ((1 << self.ncols) - 1) & ~pivots
        kern = {f: 1 << f for f in bits(free_mask)}
        for p, row in piv.items():
            for f in bits(row & free_mask):
                kern[f] |= 1 << p
        return [kern[f] for f in sorted(kern)]

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "F2Matrix":
        n = self.nrows
        if self.ncols != n:
            raise ValueError("not square")
        # augment: columns 0..n-1 = self, n..2n-1 = identity
        aug = [r | (1 << (n + i)) for i, r in enumerate(self.rows)]
        piv = reduce_fully(echelon(aug))
        if len(piv) < n or any(p >= n for p in piv):
            raise ValueError("matrix is singular")
        return F2Matrix(n, n, [piv[i] >> n for i in range(n)])

    def solve(self, b: int) -> int | None:
        """One solution ``x`` of ``M x = b`` or ``None``; free variables set to 0."""
        n = self.ncols
        aug = [r | (((b >> i) & 1) << n) for i, r in enumerate(self.rows)]
        piv = reduce_fully(echelon(aug))
        if n in piv:
            return None
        x = 0
        for p, row in piv.items():
            if (row >> n) & 1:
                x |= 1 << p
        return x


def echelon(rows: Iterable[int]) -> dict[int, int]:
    """Row echelon basis of the span of ``rows`` keyed by pivot (lowest bit)."""
    piv: dict[int, int] = {}
    for r in rows:
        while r:
            p = lowbit(r)
            other = piv.get(p)
            if other is None:
                piv[p] = r
                break
            r ^= other
    return piv


def reduce_fully(piv: dict[int, int]) -> dict[int, int]:
    """Clear every non-leading pivot bit so the echelon basis becomes reduced."""
    mask = 0
    for p in piv:
        mask |= 1 << p
    out: dict[int, int] = {}
    for p in sorted(piv, reverse=True):
        row = piv[p]
        extra = row & mask & ~(1 << p)
        while extra:
            q = lowbit(extra)
            row ^= out[q]
            extra = row & mask & ~(1 << p)
        out[p] = row
    return dict(sorted(out.items()))


class TaggedEchelon:
    """Incremental echelon basis that remembers how each row was built.

    Each stored row carries a tag bitmask; reducing a vector returns the
    residual together with the XOR of the tags used, which is how
    coordinates with respect to a chosen set of generators are read off.
    """

    def __init__(self):
        self.piv: dict[int, tuple[int, int]] = {}

    def __len__(self):
        return len(self.piv)

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        piv = self.piv
        while v:
            p = lowbit(v)
            hit = piv.get(p)
            if hit is None:
                break
            v ^= hit[0]
            tag ^= hit[1]
        return v, tag

    def insert(self, v: int, tag: int = 0) -> bool:
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        self.piv[lowbit(v)] = (v, tag)
        return True
