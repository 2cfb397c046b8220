"""Poincare duality over Z/2, orientation characters, Wu and Stiefel-Whitney classes."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.f2 import F2Matrix, unpack, vector
from .algebra.homology import AbelianGroup, enumerate_characters, homology_basis_f2, homology_z, is_connected
from .complex import Character, SimplicialComplex
from .errors import AmbiguousCharacter, DualityFails, NoFundamentalClass, NoOrientationCharacter, NotConnected
from .products import (
    Chain,
    CohomologyRing,
    HClass,
    TotalClass,
    cap_cochain,
    kronecker,
    ring_of,
    total_inverse,
    total_sq,
)


def fundamental_class_f2(X: SimplicialComplex) -> Chain:
    """The unique nonzero top-dimensional F2 cycle."""
    if not is_connected(X):
        raise NotConnected(f"{X.name or 'complex'} is not connected")
    n = X.dim
    basis = homology_basis_f2(X, n)
    dim = basis.dim
    if dim != 1:
        raise NoFundamentalClass(f"H_{n}(X;Z/2) has dimension {dim}, expected 1")
    return Chain(X, n, basis.representatives[0])


def orientation_character(X: SimplicialComplex) -> tuple[bool, Character, AbelianGroup]:
    """Find the unique twist ``c`` with ``H_n(X;Z_c) = Z``.

    Characters are enumerated as combinations of a cohomology basis, so the
    zero combination is the only one cohomologous to zero and ``orientable``
    is simply "the zero character won".
    """
    n = X.dim
    hits = []
    for c in enumerate_characters(X):
        group = homology_z(X, n, None if c.is_zero() else c)
        if group.is_z():
            hits.append((c, group))
    if not hits:
        raise NoOrientationCharacter(f"no twist makes H_{n} infinite cyclic")
    if len(hits) > 1:
        raise AmbiguousCharacter(f"{len(hits)} twists make H_{n} infinite cyclic", [c for c, _ in hits])
    c, group = hits[0]
    return c.is_zero(), c, group


@dataclass(frozen=True)
class PDCertificate:
    n: int
    fundamental_cycle_f2: Chain
    cap_matrices: tuple[F2Matrix, ...]
    orientable: bool
    character: Character
    top_homology: AbelianGroup

    @property
    def complex(self) -> SimplicialComplex:
        return self.fundamental_cycle_f2.complex


def cap_matrix(X: SimplicialComplex, fundamental: Chain, k: int) -> F2Matrix:
    """Matrix of ``- cap [X]`` from ``H^k`` to ``H_{n-k}`` in the chosen bases."""
    R = ring_of(X)
    target = homology_basis_f2(X, X.dim - k)
    cols = []
    for j in range(R.dims[k]):
        image = cap_cochain(fundamental, R.representative(R.basis_class(k, j)))
        cols.append(vector(target.coordinates(image.bits)))
    return F2Matrix.from_columns(target.dim, cols)


def verify_pd(X: SimplicialComplex) -> PDCertificate:
    """Certify untwisted Z/2 Poincare duality and find the orientation character."""
    fundamental = fundamental_class_f2(X)
    mats = []
    for k in range(X.dim + 1):
        M = cap_matrix(X, fundamental, k)
        r = M.rank()
        if M.nrows != M.ncols or r != M.nrows:
            raise DualityFails(k, max(M.nrows, M.ncols) - r)
        mats.append(M)
    orientable, c, top = orientation_character(X)
    return PDCertificate(X.dim, fundamental, tuple(mats), orientable, c, top)


def evaluate(R: CohomologyRing, x: HClass, fundamental: Chain) -> int:
    """``<x, [X]_2>`` for a top-degree class ``x``."""
    if x.degree != R.n:
        return 0
    return kronecker(R.representative(x), fundamental)


def pairing_matrix(R: CohomologyRing, fundamental: Chain, k: int) -> F2Matrix:
    """Gram matrix ``G[j][i] = <b_i cup y_j, [X]>`` for ``b_i`` in H^k, ``y_j`` in H^(n-k)."""
    n = R.n
    rows = []
    for j in range(R.dims[n - k]):
        y = R.basis_class(n - k, j)
        rows.append(vector(evaluate(R, R.multiply(R.basis_class(k, i), y), fundamental)
                           for i in range(R.dims[k])))
    return F2Matrix(R.dims[n - k], R.dims[k], rows)


@dataclass(frozen=True)
class WuProfile:
    v: TotalClass
    w: TotalClass
    w_spivak: TotalClass


def wu_class(R: CohomologyRing, fundamental: Chain, k: int) -> tuple[int, ...]:
    """Coordinates of ``v_k``: the solution of ``<v_k y, [X]> = <Sq^k y, [X]>`` for all y in H^(n-k)."""
    n = R.n
    if 2 * k > n:
        return (0,) * R.dims[k]
    G = pairing_matrix(R, fundamental, k)
    rhs = vector(evaluate(R, R.steenrod_square(k, R.basis_class(n - k, j)), fundamental)
                 for j in range(R.dims[n - k]))
    if not G.is_invertible():
        raise RuntimeError(f"pairing H^{k} x H^{n - k} is degenerate despite a PD certificate")
    return unpack(G.solve(rhs), R.dims[k])


def wu_profile(X: SimplicialComplex, cert: PDCertificate) -> WuProfile:
    R = ring_of(X)
    v = TotalClass(tuple(wu_class(R, cert.fundamental_cycle_f2, k) for k in range(R.n + 1)))
    w = total_sq(R, v)
    return WuProfile(v=v, w=w, w_spivak=total_inverse(R, w))
