import pytest

from pdreduce import catalog
from pdreduce.duality import verify_pd, wu_profile
from pdreduce.products import ring_of

MANIFOLDS = catalog.manifold_keys()
ALL_KEYS = catalog.list_keys()


@pytest.fixture(scope="session")
def cat():
    return {k: catalog.get(k).complex for k in ALL_KEYS}


@pytest.fixture(scope="session")
def certs(cat):
    return {k: verify_pd(cat[k]) for k in MANIFOLDS}


@pytest.fixture(scope="session")
def profiles(cat, certs):
    return {k: wu_profile(cat[k], certs[k]) for k in MANIFOLDS}


@pytest.fixture(scope="session")
def rings(cat):
    return {k: ring_of(cat[k]) for k in MANIFOLDS}


# One line per acceptance criterion, filled in by test_acceptance.py.
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
