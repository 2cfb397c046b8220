"""Homology and cohomology of simplicial complexes over F2 and Z."""

from __future__ import annotations

from dataclasses import dataclass

from ..complex import (
    Character,
    SimplicialComplex,
    boundary_columns_f2,
    boundary_matrix_z,
    coboundary_columns_f2,
)
from ..errors import DegreeOutOfRange, EnumerationBoundExceeded, NotConnected
from .f2 import F2Matrix, TaggedEchelon, unpack, vector
from .integer import invariant_factors

MAX_B1 = 20


class QuotientBasis:
    """A basis of a subquotient ``Z / B`` of a chain or cochain group over F2.

    ``representatives`` are (co)cycles, packed as ints over ``faces[degree]``.
    ``coordinates`` reads off the class of any (co)cycle in that basis and
    is zero exactly on ``B``.
    """

    def __init__(self, kind: str, degree: int, length: int, cycles: list[int], boundaries: list[int]):
        self.kind = kind
        self.degree = degree
        self.length = length
        ech = TaggedEchelon()
        for b in boundaries:
            ech.insert(b)
        boundary_rank = len(ech)
        expected = len(cycles) - boundary_rank
        reps = []
        for z in cycles:
            if len(reps) == expected:
                break
            residual, _ = ech.reduce(z)
            if residual:
                tag = 1 << len(reps)
                reps.append(residual)
                ech.piv[(residual & -residual).bit_length() - 1] = (residual, tag)
        self._echelon = ech
        self.representatives = tuple(reps)
        self.boundary_rank = boundary_rank
        self.cycle_rank = len(cycles)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"QuotientBasis({self.kind}, degree={self.degree}, dim={self.dim})"

    def coordinates(self, v: int) -> tuple[int, ...]:
        residual, tag = self._echelon.reduce(v)
        if residual:
            what = "cocycle" if self.kind == "cohomology" else "cycle"
            raise ValueError(f"vector is not a {what} in degree {self.degree}")
        return unpack(tag, self.dim)

    def coordinate_mask(self, v: int) -> int:
        return vector(self.coordinates(v))

    def contains(self, v: int) -> bool:
        """True when ``v`` lies in the (co)cycle space."""
        return not self._echelon.reduce(v)[0]

    def is_trivial(self, v: int) -> bool:
        """True when ``v`` is a (co)boundary."""
        return not any(self.coordinates(v))

    def lift(self, coords) -> int:
        """Representative (co)cycle of the class with the given coordinates."""
        if isinstance(coords, int):
            coords = unpack(coords, self.dim)
        out = 0
        for c, r in zip(coords, self.representatives):
            if c:
                out ^= r
        return out


# Cohomology and homology bases share one quotient type.
CohomologyBasis = QuotientBasis


def _check(X: SimplicialComplex, k: int):
    if not 0 <= k <= X.dim:
        raise DegreeOutOfRange(f"degree {k} outside 0..{X.dim}")


def _cycles(X, k):
    n = X.n_faces(k)
    if k == 0:
        return [1 << i for i in range(n)]
    rows = coboundary_columns_f2(X, k - 1)  # row for each (k-1)-face
    return F2Matrix(len(rows), n, rows).kernel()


def _cocycles(X, k):
    n = X.n_faces(k)
    if k == X.dim:
        return [1 << i for i in range(n)]
    rows = boundary_columns_f2(X, k + 1)  # row for each (k+1)-face
    return F2Matrix(len(rows), n, rows).kernel()


def homology_basis_f2(X: SimplicialComplex, k: int) -> QuotientBasis:
    _check(X, k)

    def build():
        boundaries = boundary_columns_f2(X, k + 1) if k < X.dim else []
        return QuotientBasis("homology", k, X.n_faces(k), _cycles(X, k), boundaries)

    return X.memo(("H_f2", k), build)


def homology_f2(X: SimplicialComplex, k: int) -> tuple[int, QuotientBasis]:
    """``(dim H_k(X;Z/2), basis)``; the basis carries cycle representatives."""
    basis = homology_basis_f2(X, k)
    return basis.dim, basis


def cohomology_f2(X: SimplicialComplex, k: int) -> QuotientBasis:
    """Basis of ``H^k(X;Z/2)`` with cocycle representatives."""
    _check(X, k)

    def build():
        coboundaries = coboundary_columns_f2(X, k - 1) if k > 0 else []
        return QuotientBasis("cohomology", k, X.n_faces(k), _cocycles(X, k), coboundaries)

    return X.memo(("H^f2", k), build)


def betti_f2(X: SimplicialComplex) -> tuple[int, ...]:
    return tuple(cohomology_f2(X, k).dim for k in range(X.dim + 1))


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + sum Z/d_i``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = self.torsion
        if any(d <= 1 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain of factors > 1")

    def is_z(self) -> bool:
        return self.free_rank == 1 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


def homology_z(X: SimplicialComplex, k: int, c: Character | None = None) -> AbelianGroup:
    """Integral homology, twisted by ``c`` when given."""
    _check(X, k)
    n_k = X.n_faces(k)
    rank_out = len(invariant_factors(boundary_matrix_z(X, k, c))) if k > 0 else 0
    if k < X.dim:
        factors_in = invariant_factors(boundary_matrix_z(X, k + 1, c))
    else:
        factors_in = ()
    free = n_k - rank_out - len(factors_in)
    return AbelianGroup(free, tuple(d for d in factors_in if d > 1))


def components(X: SimplicialComplex) -> int:
    parent = list(range(X.num_vertices))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    if X.dim >= 1:
        for a, b in X.faces[1]:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return sum(1 for v in range(X.num_vertices) if find(v) == v)


def is_connected(X: SimplicialComplex) -> bool:
    return components(X) == 1


def character_basis(X: SimplicialComplex) -> list[Character]:
    """Cocycle representatives of a basis of ``H^1(X;Z/2)`` as characters."""
    if not is_connected(X):
        raise NotConnected(f"{X.name or 'complex'} has {components(X)} components")
    if X.dim < 1:
        return []
    return [Character.from_vector(X, r) for r in cohomology_f2(X, 1).representatives]


def enumerate_characters(X: SimplicialComplex) -> list[Character]:
    """All ``2**b1`` characters, as F2 combinations of ``character_basis``.

    Index ``i`` uses basis element ``j`` iff bit ``j`` of ``i`` is set, so the
    zero character comes first.
    """
    basis = character_basis(X)
    if len(basis) > MAX_B1:
        raise EnumerationBoundExceeded(f"b1 = {len(basis)} exceeds the enumeration bound {MAX_B1}")
    vecs = [c.vector() for c in basis]
    out = []
    for i in range(1 << len(vecs)):
        v = 0
        for j, w in enumerate(vecs):
            if (i >> j) & 1:
                v ^= w
        out.append(Character.from_vector(X, v))
    return out
