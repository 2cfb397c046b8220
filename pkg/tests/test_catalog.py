import json

import pytest
from hypothesis import given, settings, strategies as st

from pdreduce import catalog
from pdreduce.algebra.homology import betti_f2, is_connected
from pdreduce.catalog import product, sphere
from pdreduce.complex import from_facets, load
from pdreduce.errors import SizeBoundExceeded, UnknownKey

from conftest import ALL_KEYS, MANIFOLDS
from oracles import betti_mod2

EXPECTED_KEYS = {"s1", "s2", "s3", "s4", "rp2", "rp3", "rp4", "cp2", "t2", "klein",
                 "surface_genus2", "t3", "t4", "s1_x_klein", "solid_delta3"}


def test_keys():
    assert set(catalog.list_keys()) == EXPECTED_KEYS
    assert catalog.list_keys() == sorted(EXPECTED_KEYS)
    assert len(MANIFOLDS) == 14 and "solid_delta3" not in MANIFOLDS


def test_unknown_key():
    with pytest.raises(UnknownKey):
        catalog.get("rp5")


def test_entry_is_named_after_key():
    for key in ALL_KEYS:
        assert catalog.get(key).complex.name == key


@pytest.mark.parametrize("key", ALL_KEYS)
def test_recorded_invariants(key):
    e = catalog.get(key)
    X = e.complex
    assert betti_f2(X) == e.expected.betti
    assert X.euler_characteristic() == e.expected.euler
    assert sum((-1) ** k * b for k, b in enumerate(e.expected.betti)) == e.expected.euler
    assert is_connected(X)
    assert set(e.expected.provenance) <= {"betti", "orientable", "sw", "rule"}
    assert set(e.expected.provenance.values()) <= {"trivial", "derived", "theorem"}


@pytest.mark.parametrize("key", [k for k in ALL_KEYS if k not in ("t4", "rp4")])
def test_betti_against_dense_oracle(key):
    X = catalog.get(key).complex
    assert betti_mod2(X.facets) == catalog.get(key).expected.betti


@pytest.mark.parametrize("key", MANIFOLDS)
def test_links_are_spheres(key):
    # combinatorial manifold check: every vertex link has the F2 homology of a sphere
    X = catalog.get(key).complex
    n = X.dim
    for v in range(X.num_vertices):
        link = [tuple(u for u in f if u != v) for f in X.facets if v in f]
        L = from_facets(link)
        want = (1,) + (0,) * (n - 2) + (1,) if n > 1 else (2,)
        assert betti_f2(L) == want


def test_known_sizes():
    sizes = {k: catalog.get(k).complex.f_vector() for k in ALL_KEYS}
    assert sizes["rp2"] == (6, 15, 10)
    assert sizes["t2"] == (7, 21, 14)
    assert sizes["cp2"][0] == 9 and sizes["cp2"][-1] == 36
    assert sizes["klein"] == (8, 24, 16)
    assert sizes["surface_genus2"] == (10, 36, 24)


def test_product_with_point():
    pt = from_facets([(0,)])
    X = catalog.get("rp2").complex
    P = product(X, pt)
    assert sorted(P.facets) == sorted(X.facets)


def test_circle_squared():
    s1 = sphere(1)
    T = product(s1, s1)
    assert T.f_vector() == (9, 27, 18)
    assert T.euler_characteristic() == 0
    assert betti_f2(T) == (1, 2, 1)


def test_kunneth_t3():
    assert betti_f2(catalog.get("t3").complex) == (1, 3, 3, 1)


def test_product_associative():
    s1 = sphere(1)
    a = product(product(s1, s1), s1)
    b = product(s1, product(s1, s1))
    assert sorted(a.facets) == sorted(b.facets)


def test_product_flags_intersect():
    a = sphere(1).with_flags({"manifold"})
    b = sphere(1)
    assert product(a, b).flags == frozenset()
    assert product(a, a).flags == {"manifold"}


def test_product_size_bound():
    big = catalog.get("t4").complex
    with pytest.raises(SizeBoundExceeded):
        product(big, big)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["s1", "s2", "rp2", "t2", "klein"]), st.sampled_from(["s1", "s2", "rp2"]))
def test_kunneth_over_f2(a, b):
    X, Y = catalog.get(a).complex, catalog.get(b).complex
    bx, by = betti_f2(X), betti_f2(Y)
    want = [0] * (len(bx) + len(by) - 1)
    for i, u in enumerate(bx):
        for j, w in enumerate(by):
            want[i + j] += u * w
    P = product(X, Y)
    assert betti_f2(P) == tuple(want)
    assert P.euler_characteristic() == X.euler_characteristic() * Y.euler_characteristic()


def test_export_round_trip(tmp_path):
    paths = catalog.export_json(tmp_path)
    assert len(paths) == 15
    for path in paths:
        with open(path) as fh:
            doc = json.load(fh)
        X = load(path)
        key = doc["name"]
        assert X == catalog.get(key).complex
