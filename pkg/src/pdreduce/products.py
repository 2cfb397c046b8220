"""Cup, cup-i and cap products on simplicial (co)chains; Steenrod squares.

Everything is over F2 and uses the ordered-simplex conventions of
:mod:`pdreduce.complex`: the front face of ``[v0..vn]`` consists of the
lowest vertices, the back face of the highest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .algebra.f2 import F2Matrix, bits, vector
from .algebra.homology import QuotientBasis, cohomology_f2, components
from .complex import SimplicialComplex
from .errors import DegreeOutOfRange, IndexOutOfRange, NotConnected, NotInvertible


@dataclass(frozen=True)
class Cochain:
    """An F2 cochain: ``bits`` is packed over ``complex.faces[degree]``."""

    complex: SimplicialComplex
    degree: int
    bits: int = 0

    def __add__(self, other: "Cochain") -> "Cochain":
        _same(self, other)
        return Cochain(self.complex, self.degree, self.bits ^ other.bits)

    def __call__(self, simplex) -> int:
        return (self.bits >> self.complex.index(self.degree)[tuple(simplex)]) & 1

    def coboundary(self) -> "Cochain":
        X, k = self.complex, self.degree
        out = 0
        if k + 1 <= X.dim:
            on = set(bits(self.bits))
            idx = X.index(k)
            for j, s in enumerate(X.faces[k + 1]):
                acc = 0
                for i in range(k + 2):
                    acc ^= idx[s[:i] + s[i + 1:]] in on
                if acc:
                    out |= 1 << j
        return Cochain(X, k + 1, out)

    def is_cocycle(self) -> bool:
        return not self.coboundary().bits


@dataclass(frozen=True)
class Chain:
    """An F2 chain: ``bits`` is packed over ``complex.faces[degree]``."""

    complex: SimplicialComplex
    degree: int
    bits: int = 0

    def __add__(self, other: "Chain") -> "Chain":
        _same(self, other)
        return Chain(self.complex, self.degree, self.bits ^ other.bits)

    def boundary(self) -> "Chain":
        X, k = self.complex, self.degree
        out = 0
        if k >= 1:
            idx = X.index(k - 1)
            for j in bits(self.bits):
                s = X.faces[k][j]
                for i in range(k + 1):
                    out ^= 1 << idx[s[:i] + s[i + 1:]]
        return Chain(X, k - 1, out)

    def is_cycle(self) -> bool:
        return self.degree == 0 or not self.boundary().bits


def _same(a, b):
    if a.complex is not b.complex and a.complex != b.complex:
        raise ValueError("operands live on different complexes")
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch {a.degree} vs {b.degree}")


def kronecker(phi: Cochain, z: Chain) -> int:
    """Evaluate a cochain on a chain."""
    _same(phi, z)
    return bin(phi.bits & z.bits).count("1") & 1


def _cup_i_terms(n: int, p: int, q: int, i: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Position pairs (alpha face, beta face) of Steenrod's cup-i formula on ``[0..n]``.

    For ``0 <= u_0 < ... < u_i <= n`` the simplex is cut into the intervals
    ``[0,u_0], [u_0,u_1], ..., [u_i,n]``; the first cochain sees the union of
    the even-numbered intervals, the second the odd-numbered ones.
    """
    out = []
    for cuts in combinations(range(n + 1), i + 1):
        ends = (0,) + cuts + (n,)
        front: list[int] = []
        back: list[int] = []
        for j in range(i + 2):
            piece = range(ends[j], ends[j + 1] + 1)
            (front if j % 2 == 0 else back).extend(piece)
        if len(front) == p + 1 and len(back) == q + 1:
            out.append((tuple(front), tuple(back)))
    return out


def _cup_i_table(X: SimplicialComplex, p: int, q: int, i: int):
    """For each ``(p+q-i)``-simplex, the face-index pairs that contribute."""
    n = p + q - i

    def build():
        terms = _cup_i_terms(n, p, q, i)
        ip, iq = X.index(p), X.index(q)
        table = []
        for s in X.faces[n]:
            table.append(tuple((ip[tuple(s[t] for t in a)], iq[tuple(s[t] for t in b)])
                               for a, b in terms))
        return tuple(table)

    return X.memo(("cup_i", p, q, i), build)


def cup_i_cochain(phi: Cochain, psi: Cochain, i: int) -> Cochain:
    """Steenrod's cup-i product, a ``(p+q-i)``-cochain.

    ``cup_i_cochain(x, x, d - k)`` represents ``Sq^k[x]`` for a d-cocycle x.
    """
    X, p, q = phi.complex, phi.degree, psi.degree
    if psi.complex is not X and psi.complex != X:
        raise ValueError("operands live on different complexes")
    if i < 0 or i > min(p, q):
        raise IndexOutOfRange(f"cup-{i} needs 0 <= i <= min({p}, {q})")
    n = p + q - i
    if n > X.dim:
        return Cochain(X, n, 0)
    a = set(bits(phi.bits))
    b = a if psi.bits == phi.bits else set(bits(psi.bits))
    out = 0
    for j, pairs in enumerate(_cup_i_table(X, p, q, i)):
        acc = 0
        for fa, fb in pairs:
            if fa in a and fb in b:
                acc ^= 1
        if acc:
            out |= 1 << j
    return Cochain(X, n, out)


def cup_cochain(phi: Cochain, psi: Cochain) -> Cochain:
    """Alexander-Whitney cup product: front p-face times back q-face."""
    if phi.degree < 0 or psi.degree < 0:
        raise DegreeOutOfRange("negative cochain degree")
    return cup_i_cochain(phi, psi, 0)


def cap_cochain(z: Chain, phi: Cochain) -> Chain:
    """``sigma cap phi = phi(back k-face) * (front (n-k)-face)``."""
    X, n, k = z.complex, z.degree, phi.degree
    if phi.complex is not X and phi.complex != X:
        raise ValueError("operands live on different complexes")
    if not 0 <= k <= n:
        raise DegreeOutOfRange(f"cannot cap an {n}-chain with a {k}-cochain")
    on = set(bits(phi.bits))
    ik, ifront = X.index(k), X.index(n - k)
    out = 0
    for j in bits(z.bits):
        s = X.faces[n][j]
        if ik[s[n - k:]] in on:
            out ^= 1 << ifront[s[:n - k + 1]]
    return Chain(X, n - k, out)


def steenrod_square_cochain(x: Cochain, k: int) -> Cochain:
    """Cochain representative of ``Sq^k`` of a cocycle (zero when ``k`` is out of range)."""
    d = x.degree
    if k < 0 or k > d:
        return Cochain(x.complex, d + k, 0)
    return cup_i_cochain(x, x, d - k)


class HClass(NamedTuple):
    """A homogeneous class: degree plus coordinates in the ring's basis."""

    degree: int
    coords: tuple[int, ...]


@dataclass(frozen=True)
class TotalClass:
    """Element of ``H^0 + ... + H^n`` stored as per-degree coordinate tuples."""

    components: tuple[tuple[int, ...], ...]

    def __getitem__(self, k: int) -> tuple[int, ...]:
        return self.components[k]

    def degree_part(self, k: int) -> HClass:
        return HClass(k, self.components[k])

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.components) if any(c))

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.components]


class CohomologyRing:
    """``H^*(X;Z/2)`` with dense product and Steenrod-square tables."""

    def __init__(self, X: SimplicialComplex, bases: Sequence[QuotientBasis]):
        self.complex = X
        self.bases = tuple(bases)
        self.n = X.dim
        self.dims = tuple(b.dim for b in self.bases)
        self.unit = (1,) + (0,) * (self.dims[0] - 1)
        self.mult_table: dict[tuple[int, int, int, int], tuple[int, ...]] = {}
        self.sq_table: dict[tuple[int, int, int], tuple[int, ...]] = {}
        reps = [[Cochain(X, d, r) for r in b.representatives] for d, b in enumerate(self.bases)]
        self._reps = reps
        for p in range(self.n + 1):
            for q in range(self.n + 1 - p):
                for i, x in enumerate(reps[p]):
                    for j, y in enumerate(reps[q]):
                        self.mult_table[(p, i, q, j)] = self.bases[p + q].coordinates(cup_cochain(x, y).bits)
        for d in range(self.n + 1):
            for i, x in enumerate(reps[d]):
                for k in range(0, self.n - d + 1):
                    self.sq_table[(k, d, i)] = self.bases[d + k].coordinates(steenrod_square_cochain(x, k).bits)

    def __repr__(self):
        return f"CohomologyRing({self.complex.name!r}, dims={self.dims})"

    def zero(self, d: int) -> HClass:
        return HClass(d, (0,) * (self.dims[d] if 0 <= d <= self.n else 0))

    def basis_class(self, d: int, i: int) -> HClass:
        return HClass(d, tuple(int(j == i) for j in range(self.dims[d])))

    def one(self) -> HClass:
        return HClass(0, self.unit)

    def representative(self, x: HClass) -> Cochain:
        return Cochain(self.complex, x.degree, self.bases[x.degree].lift(x.coords))

    def class_of(self, phi: Cochain) -> HClass:
        return HClass(phi.degree, self.bases[phi.degree].coordinates(phi.bits))

    def add(self, x: HClass, y: HClass) -> HClass:
        if x.degree != y.degree:
            raise ValueError("cannot add classes of different degree")
        return HClass(x.degree, tuple(a ^ b for a, b in zip(x.coords, y.coords)))

    def multiply(self, x: HClass, y: HClass) -> HClass:
        d = x.degree + y.degree
        if d > self.n:
            return HClass(d, ())
        acc = [0] * self.dims[d]
        for i in (i for i, c in enumerate(x.coords) if c):
            for j in (j for j, c in enumerate(y.coords) if c):
                for t, v in enumerate(self.mult_table[(x.degree, i, y.degree, j)]):
                    acc[t] ^= v
        return HClass(d, tuple(acc))

    def power(self, x: HClass, e: int) -> HClass:
        out = self.one()
        for _ in range(e):
            out = self.multiply(out, x)
        return out

    def steenrod_square(self, k: int, x: HClass) -> HClass:
        d = x.degree + k
        if k < 0 or k > x.degree or d > self.n:
            return self.zero(d) if 0 <= d <= self.n else HClass(d, ())
        acc = [0] * self.dims[d]
        for i in (i for i, c in enumerate(x.coords) if c):
            for t, v in enumerate(self.sq_table[(k, x.degree, i)]):
                acc[t] ^= v
        return HClass(d, tuple(acc))

    def multiplication_matrix(self, x: HClass, q: int) -> F2Matrix:
        """Matrix of ``y -> x cup y`` from ``H^q`` to ``H^(q + deg x)``."""
        cols = [vector(self.multiply(x, self.basis_class(q, j)).coords) for j in range(self.dims[q])]
        return F2Matrix.from_columns(self.dims[x.degree + q], cols)

    def square_matrix(self, k: int, d: int) -> F2Matrix:
        """Matrix of ``Sq^k`` from ``H^d`` to ``H^(d+k)``."""
        target = self.dims[d + k] if d + k <= self.n else 0
        cols = [vector(self.steenrod_square(k, self.basis_class(d, j)).coords) for j in range(self.dims[d])]
        return F2Matrix.from_columns(target, cols)

    # total classes

    def total(self, parts: dict[int, Sequence[int]] | None = None) -> TotalClass:
        comps = [tuple(0 for _ in range(m)) for m in self.dims]
        for d, c in (parts or {}).items():
            comps[d] = tuple(c)
        return TotalClass(tuple(comps))

    def total_one(self) -> TotalClass:
        return self.total({0: self.unit})

    def total_multiply(self, u: TotalClass, w: TotalClass) -> TotalClass:
        comps = [self.zero(d) for d in range(self.n + 1)]
        for a in range(self.n + 1):
            for b in range(self.n + 1 - a):
                comps[a + b] = self.add(comps[a + b], self.multiply(u.degree_part(a), w.degree_part(b)))
        return TotalClass(tuple(c.coords for c in comps))


def ring_of(X: SimplicialComplex) -> CohomologyRing:
    """Cohomology ring of a connected complex, memoized on the complex."""
    if components(X) != 1:
        raise NotConnected(f"{X.name or 'complex'} is not connected")
    return X.memo("ring", lambda: CohomologyRing(X, [cohomology_f2(X, k) for k in range(X.dim + 1)]))


def steenrod_square(R: CohomologyRing, k: int, x: HClass) -> HClass:
    return R.steenrod_square(k, x)


def total_sq(R: CohomologyRing, v: TotalClass) -> TotalClass:
    """``Sq(v) = sum_k Sq^k(v)``, collected by target degree."""
    comps = [R.zero(d) for d in range(R.n + 1)]
    for d in range(R.n + 1):
        for k in range(0, R.n - d + 1):
            comps[d + k] = R.add(comps[d + k], R.steenrod_square(k, v.degree_part(d)))
    return TotalClass(tuple(c.coords for c in comps))


def total_inverse(R: CohomologyRing, w: TotalClass) -> TotalClass:
    """Inverse of a total class with unit degree-0 part, by back-substitution.

    ``u_0 = 1`` and ``u_k = sum_{j=1..k} w_j u_{k-j}`` (signs vanish over F2).
    """
    if tuple(w[0]) != R.unit:
        raise NotInvertible("degree-0 part of the total class is not 1")
    u = [R.one()]
    for k in range(1, R.n + 1):
        acc = R.zero(k)
        for j in range(1, k + 1):
            acc = R.add(acc, R.multiply(w.degree_part(j), u[k - j]))
        u.append(acc)
    return TotalClass(tuple(c.coords for c in u))
