import pytest
from hypothesis import given, settings, strategies as st

from pdreduce import catalog
from pdreduce.algebra.homology import betti_f2, cohomology_f2, homology_z
from pdreduce.complex import from_facets
from pdreduce.duality import (
    evaluate,
    fundamental_class_f2,
    orientation_character,
    pairing_matrix,
    verify_pd,
    wu_profile,
)
from pdreduce.errors import DualityFails, NoFundamentalClass, NotConnected
from pdreduce.catalog import sphere

from conftest import MANIFOLDS
from oracles import pairing_oracle

ORIENTABLE = {"s1", "s2", "s3", "s4", "t2", "surface_genus2", "rp3", "cp2", "t3", "t4"}
WU_ORACLE_KEYS = ["rp2", "t2", "klein", "surface_genus2", "rp3", "cp2", "s1_x_klein", "s3"]


def test_fundamental_class_of_sphere_sums_all_facets():
    X = sphere(2)
    z = fundamental_class_f2(X)
    assert z.bits == 0b1111


def test_fundamental_class_of_rp2_sums_all_facets():
    X = catalog.get("rp2").complex
    assert fundamental_class_f2(X).bits == (1 << 10) - 1


def test_solid_simplex_has_no_fundamental_class():
    with pytest.raises(NoFundamentalClass):
        fundamental_class_f2(catalog.get("solid_delta3").complex)
    with pytest.raises(NoFundamentalClass):
        verify_pd(from_facets([(0, 1, 2, 3, 4)]))


def test_wedge_of_spheres():
    a = [f for f in sphere(4).facets]
    b = [tuple(v + 5 if v else 0 for v in f) for f in sphere(4).facets]
    X = from_facets(a + b)
    assert betti_f2(X) == (1, 0, 0, 0, 2)
    with pytest.raises(NoFundamentalClass):
        verify_pd(X)


def test_disconnected_input():
    X = from_facets([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (4, 5, 6), (4, 5, 7), (4, 6, 7), (5, 6, 7)])
    with pytest.raises(NotConnected):
        verify_pd(X)


def test_duality_failure_reports_degree():
    # S^2 wedge S^1: one top class, but capping kills the circle's class
    X = from_facets(list(sphere(2).facets) + [(0, 4), (4, 5), (0, 5)])
    assert betti_f2(X) == (1, 1, 1)
    with pytest.raises(DualityFails) as info:
        verify_pd(X)
    assert info.value.degree == 1 and info.value.rank_deficit == 1


@pytest.mark.parametrize("key", MANIFOLDS)
def test_orientation(key, certs):
    cert = certs[key]
    assert cert.orientable == (key in ORIENTABLE)
    assert cert.orientable == catalog.get(key).expected.orientable
    assert cert.top_homology.is_z()
    X = catalog.get(key).complex
    if cert.orientable:
        assert homology_z(X, X.dim).is_z()
    else:
        assert not homology_z(X, X.dim).is_z()
        assert not cert.character.is_zero()


def test_orientation_character_rp2_is_nontrivial_class():
    X = catalog.get("rp2").complex
    orientable, c, top = orientation_character(X)
    assert not orientable and str(top) == "Z"
    # the character represents the generator of H^1(RP^2;Z/2)
    assert cohomology_f2(X, 1).coordinates(c.vector()) == (1,)


@pytest.mark.parametrize("key", MANIFOLDS)
def test_cap_matrices_invertible(key, certs):
    cert = certs[key]
    X = catalog.get(key).complex
    b = betti_f2(X)
    for k, M in enumerate(cert.cap_matrices):
        assert M.nrows == M.ncols == b[k]
        assert M.is_invertible()
        assert b[k] == b[cert.n - k]


@pytest.mark.parametrize("key", MANIFOLDS)
def test_pairing_nondegenerate(key, certs, rings):
    R = rings[key]
    for k in range(R.n + 1):
        assert pairing_matrix(R, certs[key].fundamental_cycle_f2, k).is_invertible()


@pytest.mark.parametrize("key", MANIFOLDS)
def test_wu_identity(key, certs, profiles, rings):
    R, z = rings[key], certs[key].fundamental_cycle_f2
    v = profiles[key].v
    n = R.n
    for k in range(n + 1):
        vk = v.degree_part(k)
        if 2 * k > n:
            assert not any(vk.coords)
        for j in range(R.dims[n - k]):
            y = R.basis_class(n - k, j)
            assert evaluate(R, R.steenrod_square(k, y), z) == evaluate(R, R.multiply(vk, y), z)


@pytest.mark.parametrize("key", MANIFOLDS)
def test_sw_times_spivak_is_one(key, profiles, rings):
    R, p = rings[key], profiles[key]
    assert R.total_multiply(p.w, p.w_spivak) == R.total_one()


@pytest.mark.parametrize("key", MANIFOLDS)
def test_sw_degrees_match_catalog(key, profiles):
    w = profiles[key].w
    assert tuple(w.nonzero_degrees()) == catalog.get(key).expected.sw_degrees


@pytest.mark.parametrize("key", ["rp3", "t3", "s1_x_klein", "s3"])
def test_w2_equals_w1_squared_in_dim3(key, profiles, rings):
    R, w = rings[key], profiles[key].w
    w1 = w.degree_part(1)
    assert w.degree_part(2) == R.multiply(w1, w1)


@pytest.mark.parametrize("key", MANIFOLDS)
def test_w1_vanishes_iff_orientable(key, certs, profiles):
    assert (not any(profiles[key].w[1])) == certs[key].orientable


@pytest.mark.parametrize("key", MANIFOLDS)
def test_top_sw_is_euler_characteristic(key, certs, profiles, rings):
    R = rings[key]
    top = profiles[key].w.degree_part(R.n)
    assert evaluate(R, top, certs[key].fundamental_cycle_f2) == catalog.get(key).complex.euler_characteristic() % 2


@pytest.mark.parametrize("key", WU_ORACLE_KEYS)
def test_wu_and_sw_against_pairing_oracle(key, profiles):
    X = catalog.get(key).complex
    orc = pairing_oracle(X, [cohomology_f2(X, k).representatives for k in range(X.dim + 1)])
    p = profiles[key]
    v = orc.total_wu()
    w = orc.total_sw(v)
    assert [tuple(c) for c in v] == [tuple(c) for c in p.v.components]
    assert [tuple(c) for c in w] == [tuple(c) for c in p.w.components]
    assert [tuple(c) for c in orc.total_inverse(w)] == [tuple(c) for c in p.w_spivak.components]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["rp2", "t2", "klein", "rp3", "s1_x_klein"]), st.randoms(use_true_random=False))
def test_invariants_do_not_depend_on_labels(key, rnd):
    X = catalog.get(key).complex
    perm = list(range(X.num_vertices))
    rnd.shuffle(perm)
    Y = from_facets([tuple(perm[v] for v in f) for f in X.facets])
    cx, cy = verify_pd(X), verify_pd(Y)
    assert betti_f2(X) == betti_f2(Y)
    assert cx.orientable == cy.orientable
    assert str(cx.top_homology) == str(cy.top_homology)
    px, py = wu_profile(X, cx), wu_profile(Y, cy)
    assert px.w.nonzero_degrees() == py.w.nonzero_degrees()
    assert px.w_spivak.nonzero_degrees() == py.w_spivak.nonzero_degrees()
