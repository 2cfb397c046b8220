import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdreduce import catalog
from pdreduce.algebra.f2 import F2Matrix, echelon
from pdreduce.algebra.homology import (
    AbelianGroup,
    betti_f2,
    character_basis,
    cohomology_f2,
    components,
    enumerate_characters,
    homology_f2,
    homology_z,
)
from pdreduce.algebra.integer import IntMatrix, determinant, invariant_factors, smith_normal_form
from pdreduce.complex import Character, from_facets
from pdreduce.errors import DegreeOutOfRange, EnumerationBoundExceeded, NotConnected
from pdreduce.products import Chain, Cochain

from conftest import ALL_KEYS
from oracles import betti_mod2, det_leibniz, gcd_of_minors, rank_mod2, rank_over_q

# --- F2 matrices -------------------------------------------------------------

f2_matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(f2_matrices)
def test_f2_rank_and_kernel_against_oracle(rows):
    M = F2Matrix.from_lists(rows)
    assert M.rank() == rank_mod2(rows)
    assert M.transpose().rank() == M.rank()
    kern = M.kernel()
    assert len(kern) == M.ncols - M.rank()
    assert all(M.apply(k) == 0 for k in kern)
    assert len(echelon(kern)) == len(kern)


@settings(max_examples=100, deadline=None)
@given(f2_matrices, st.data())
def test_f2_solve(rows, data):
    M = F2Matrix.from_lists(rows)
    x = data.draw(st.integers(0, (1 << M.ncols) - 1))
    b = M.apply(x)
    sol = M.solve(b)
    assert sol is not None and M.apply(sol) == b


def test_f2_inverse_and_rref_determinism():
    M = F2Matrix.from_lists([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert (M @ M.inverse()) == F2Matrix.identity(3)
    assert M.rref() == M.rref()
    with pytest.raises(ValueError):
        F2Matrix.from_lists([[1, 1], [1, 1]]).inverse()


# --- homology over F2 ----------------------------------------------------------

def test_homology_sphere():
    X = catalog.get("s2").complex
    assert tuple(homology_f2(X, k)[0] for k in range(3)) == (1, 0, 1)


@pytest.mark.parametrize("key,expected", [("rp2", (1, 1, 1)), ("klein", (1, 2, 1)), ("t2", (1, 2, 1)),
                                          ("rp4", (1, 1, 1, 1, 1))])
def test_homology_against_rank_oracle(key, expected):
    X = catalog.get(key).complex
    if key != "rp4":
        assert betti_mod2(X.facets) == expected
    assert tuple(homology_f2(X, k)[0] for k in range(X.dim + 1)) == expected
    assert betti_f2(X) == expected


def test_homology_degree_range():
    X = catalog.get("s2").complex
    with pytest.raises(DegreeOutOfRange):
        homology_f2(X, 3)
    with pytest.raises(DegreeOutOfRange):
        cohomology_f2(X, -1)


@pytest.mark.parametrize("key", ALL_KEYS)
def test_cohomology_dims_match_homology(key):
    X = catalog.get(key).complex
    for k in range(X.dim + 1):
        H = cohomology_f2(X, k)
        assert H.dim == homology_f2(X, k)[0]
        for r in H.representatives:
            assert Cochain(X, k, r).is_cocycle()
        for r in homology_f2(X, k)[1].representatives:
            assert Chain(X, k, r).is_cycle()


def test_b0_counts_components():
    X = from_facets([[0, 1], [1, 2], [3, 4], [5]])
    assert cohomology_f2(X, 0).dim == components(X) == 3


def test_coordinates_kill_coboundaries():
    X = catalog.get("t2").complex
    H = cohomology_f2(X, 1)
    rng = random.Random(7)
    for _ in range(20):
        f = Cochain(X, 0, rng.getrandbits(X.n_faces(0)))
        assert H.coordinates(f.coboundary().bits) == (0, 0)
        z = H.lift((1, 0))
        assert H.coordinates(z ^ f.coboundary().bits) == (1, 0)
    with pytest.raises(ValueError):
        H.coordinates(1)  # a single edge is not a cocycle


def test_bases_are_deterministic():
    a = from_facets(catalog.RP4)
    b = from_facets(catalog.RP4)
    for k in range(5):
        assert cohomology_f2(a, k).representatives == cohomology_f2(b, k).representatives


# --- Smith normal form ----------------------------------------------------------

def _check_certificate(A, snf):
    U, V, D = [list(r) for r in snf.U], [list(r) for r in snf.V], [list(r) for r in snf.D]
    m, n = len(A), len(A[0])

    def mul(P, Q):
        return [[sum(P[i][k] * Q[k][j] for k in range(len(Q))) for j in range(len(Q[0]))] for i in range(len(P))]

    assert mul(mul(U, A), V) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    for i in range(m):
        for j in range(n):
            if i != j or i >= snf.rank:
                assert D[i][j] == 0
    f = snf.factors
    assert all(x > 0 for x in f)
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


def test_snf_examples():
    assert smith_normal_form([[2]]).factors == (2,)
    assert smith_normal_form([[6, 0], [0, 4]]).factors == (2, 12)
    assert smith_normal_form([[0, 0], [0, 0]]).factors == ()


int_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(int_matrices)
def test_snf_certificate_and_minors(A):
    snf = smith_normal_form(A)
    _check_certificate(A, snf)
    r = snf.rank
    assert r == rank_over_q(A)
    prod = 1
    for d in snf.factors:
        prod *= d
    if r:
        assert prod == gcd_of_minors(A, r)
    # the sparse path agrees with the dense one
    assert invariant_factors(IntMatrix.from_dense(A)) == snf.factors


@settings(max_examples=60, deadline=None)
@given(int_matrices)
def test_determinant_against_leibniz(A):
    n = min(len(A), len(A[0]))
    sq = [row[:n] for row in A[:n]]
    assert determinant(sq) == det_leibniz(sq)


def test_snf_large_entries_exact():
    big = 10 ** 30
    snf = smith_normal_form([[big, 0], [0, big * 6]])
    assert snf.factors == (big, 6 * big)


def test_boundary_snf_certificates():
    X = catalog.get("rp2").complex
    from pdreduce.complex import boundary_matrix_z
    for k in (1, 2):
        A = boundary_matrix_z(X, k).to_dense()
        _check_certificate(A, smith_normal_form(A))


# --- integral and twisted homology ---------------------------------------------

def _nontrivial(X):
    (c,) = character_basis(X)
    return c


def test_homology_z_rp2():
    X = catalog.get("rp2").complex
    assert homology_z(X, 0) == AbelianGroup(1)
    assert homology_z(X, 1) == AbelianGroup(0, (2,))
    assert homology_z(X, 2) == AbelianGroup(0)
    assert homology_z(X, 2, _nontrivial(X)).is_z()


def test_homology_z_circle():
    X = catalog.get("s1").complex
    assert homology_z(X, 0).is_z() and homology_z(X, 1).is_z()


def test_homology_z_klein_and_rp3():
    assert homology_z(catalog.get("klein").complex, 1) == AbelianGroup(1, (2,))
    X = catalog.get("rp3").complex
    assert [str(homology_z(X, k)) for k in range(4)] == ["Z", "Z/2", "0", "Z"]


def test_abelian_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"


def test_character_basis_counts():
    assert character_basis(catalog.get("s3").complex) == []
    (c,) = character_basis(catalog.get("rp2").complex)
    assert not c.is_zero()
    assert len(character_basis(catalog.get("klein").complex)) == 2


def test_rp2_character_nontrivial_on_a_cycle():
    X = catalog.get("rp2").complex
    c = _nontrivial(X)
    _, H1 = homology_f2(X, 1)
    (z,) = H1.representatives
    assert bin(c.vector() & z).count("1") % 2 == 1


def test_enumeration_spans_all_classes():
    X = catalog.get("klein").complex
    chars = enumerate_characters(X)
    assert len(chars) == 4 and chars[0].is_zero()
    H = cohomology_f2(X, 1)
    assert sorted(H.coordinates(c.vector()) for c in chars) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_not_connected():
    with pytest.raises(NotConnected):
        character_basis(from_facets([[0, 1], [2, 3]]))


def test_enumeration_bound(monkeypatch):
    import pdreduce.algebra.homology as h
    monkeypatch.setattr(h, "MAX_B1", 1)
    with pytest.raises(EnumerationBoundExceeded):
        enumerate_characters(catalog.get("klein").complex)


def test_character_vector_roundtrip():
    X = catalog.get("klein").complex
    for c in character_basis(X):
        assert Character.from_vector(X, c.vector()) == c
