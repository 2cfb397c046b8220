"""Reducibility verdicts and the d2 data of the twisted spin-bordism AHSS."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.f2 import F2Matrix, unpack, vector
from .algebra.homology import cohomology_f2, homology_basis_f2
from .complex import SimplicialComplex
from .duality import PDCertificate, WuProfile
from .errors import WrongDimension
from .products import CohomologyRing, HClass, ring_of

REDUCIBLE = "Reducible"
UNDETERMINED = "Undetermined"

# Fixed evaluation order; the first rule whose hypothesis holds decides.
RULE_ORDER = (
    "ManifoldRule",
    "Dim2Rule",
    "Dim3Rule",
    "Dim4OrientedRule",
    "Dim4H1ZeroRule",
    "Dim4H3ZeroRule",
)

CITATIONS = {
    "ManifoldRule": "A PD space homotopy equivalent to a closed smooth manifold is reducible "
                    "(the manifold flag is a caller assertion).",
    "Dim2Rule": "Every PD space of dimension at most 2 is reducible.",
    "Dim3Rule": "Every 3-dimensional PD space is reducible.",
    "Dim4OrientedRule": "Every oriented 4-dimensional PD space is reducible.",
    "Dim4H1ZeroRule": "A 4-dimensional PD space with H_1(X;Z/2) = 0 is reducible.",
    "Dim4H3ZeroRule": "A 4-dimensional PD space with H^3(X;Z/2) = 0 is reducible, "
                      "since the obstruction group vanishes.",
    "NoRule": "In dimension at most 4 the only obstruction to reducibility is "
              "e1(SF(X)) in H^3(X;Z/2); no positive rule applies.",
}

OBSTRUCTION_NOTE = "obstruction location: e1 in H^3(X;Z/2)"
NONORIENTABLE_DIM4_NOTE = (
    "non-orientable 4-dimensional PD spaces with non-reducible Spivak normal fibration "
    "exist (Hambleton-Milgram), so no verdict is possible without computing e1"
)
HIGH_DIM_NOTE = (
    "from dimension 5 on irreducible PD spaces exist (e.g. a 5-dimensional space stably "
    "equivalent to S^3 v C(eta^2)); detecting them needs a secondary operation, which is "
    "not computed"
)


@dataclass(frozen=True)
class Verdict:
    outcome: str
    rule: str
    citation: str
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "rule": self.rule, "citation": self.citation,
                "notes": list(self.notes)}


def _hypothesis(rule: str, X: SimplicialComplex, cert: PDCertificate) -> bool:
    n = cert.n
    if rule == "ManifoldRule":
        return "manifold" in X.flags
    if rule == "Dim2Rule":
        return n <= 2
    if rule == "Dim3Rule":
        return n == 3
    if rule == "Dim4OrientedRule":
        return n == 4 and cert.orientable
    if rule == "Dim4H1ZeroRule":
        return n == 4 and homology_basis_f2(X, 1).dim == 0
    if rule == "Dim4H3ZeroRule":
        return n == 4 and cohomology_f2(X, 3).dim == 0
    raise ValueError(rule)


def reducibility_verdict(X: SimplicialComplex, cert: PDCertificate) -> Verdict:
    """First applicable positive rule, otherwise an abstention.

    The engine never answers "irreducible": only the location of the
    obstruction is known, not a formula for it.
    """
    for rule in RULE_ORDER:
        if _hypothesis(rule, X, cert):
            return Verdict(REDUCIBLE, rule, CITATIONS[rule])
    notes = [OBSTRUCTION_NOTE]
    if cert.n == 4:
        notes.append(NONORIENTABLE_DIM4_NOTE)
    elif cert.n >= 5:
        notes.append(HIGH_DIM_NOTE)
    return Verdict(UNDETERMINED, "NoRule", CITATIONS["NoRule"], tuple(notes))


@dataclass(frozen=True)
class D2Data:
    w2: tuple[int, ...]
    sq2_w2_matrix: F2Matrix
    d2_matrix: F2Matrix
    d2_of_fundamental: tuple[int, ...]


def _adjoint(R: CohomologyRing, image_of, p: int, q: int) -> F2Matrix:
    """Dual of a map ``F: H^p -> H^q`` as a matrix ``H_q -> H_p``.

    The image of a homology class ``z`` is the unique ``h`` with
    ``<x, h> = <F(x), z>`` for every basis class x of ``H^p``.
    """
    X = R.complex
    hp, hq = homology_basis_f2(X, p), homology_basis_f2(X, q)
    xs = [R.representative(R.basis_class(p, i)) for i in range(R.dims[p])]
    fx = [R.representative(image_of(R.basis_class(p, i))) for i in range(R.dims[p])]
    # Kronecker matrix K[i][j] = <x_i, h_j>
    K = F2Matrix(len(xs), hp.dim, [vector(bin(x.bits & h).count("1") & 1 for h in hp.representatives)
                                   for x in xs])
    cols = []
    for z in hq.representatives:
        rhs = vector(bin(f.bits & z).count("1") & 1 for f in fx)
        sol = K.solve(rhs)
        if sol is None:
            raise RuntimeError("Kronecker pairing is degenerate")
        cols.append(sol)
    return F2Matrix.from_columns(hp.dim, cols)


def _require_dim4(X: SimplicialComplex):
    if X.dim != 4:
        raise WrongDimension(f"d2 data is defined for 4-dimensional inputs, got dimension {X.dim}")


def ahss_d2(X: SimplicialComplex, cert: PDCertificate, profile: WuProfile) -> D2Data:
    """The map ``x -> Sq^2(x) + w2 x`` on H^2 and its dual ``H_4 -> H_2``."""
    _require_dim4(X)
    R = ring_of(X)
    w2 = HClass(2, tuple(profile.w[2]))

    def twisted_sq2(x: HClass) -> HClass:
        return R.add(R.steenrod_square(2, x), R.multiply(w2, x))

    cols = [vector(twisted_sq2(R.basis_class(2, i)).coords) for i in range(R.dims[2])]
    sq2_w2 = F2Matrix.from_columns(R.dims[4], cols)
    d2 = _adjoint(R, twisted_sq2, 2, 4)
    h4 = homology_basis_f2(X, 4)
    fund = unpack(h4.coordinate_mask(cert.fundamental_cycle_f2.bits), h4.dim)
    d2_fund = unpack(d2.apply(vector(fund)), d2.nrows)
    return D2Data(w2=w2.coords, sq2_w2_matrix=sq2_w2, d2_matrix=d2, d2_of_fundamental=d2_fund)


def d2_h3_check(X: SimplicialComplex) -> F2Matrix:
    """Dual of ``Sq^2: H^1 -> H^3`` as a matrix ``H_3 -> H_1``; always zero."""
    _require_dim4(X)
    R = ring_of(X)
    M = _adjoint(R, lambda x: R.steenrod_square(2, x), 1, 3)
    if not M.is_zero():
        raise RuntimeError("Sq^2 is nonzero on degree-1 classes")
    return M
