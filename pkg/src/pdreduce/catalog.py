"""Built-in triangulations with known invariants, and the staircase product.

None of the facet lists below is trusted: the test suite recomputes every
recorded invariant from scratch.  Expected values carry a provenance tag:
``trivial`` (immediate from the construction), ``derived`` (a classical
computation re-done by the test oracles) or ``theorem`` (a verdict that
follows from a cited reducibility result).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from types import MappingProxyType
from typing import Mapping

from .complex import MAX_FACES_PER_DEGREE, SimplicialComplex, from_facets
from .errors import SizeBoundExceeded, UnknownKey


def product(X: SimplicialComplex, Y: SimplicialComplex, name: str | None = None) -> SimplicialComplex:
    """Staircase triangulation of ``X x Y``.

    Vertex ``(x, y)`` becomes ``x * |V(Y)| + y``.  For every pair of facets
    the top simplices are the monotone lattice paths through their vertex
    grid, which is consistent with the global (lexicographic) vertex order.
    """
    ny = Y.num_vertices
    total = sum(comb(len(a) + len(b) - 2, len(a) - 1) for a in X.facets for b in Y.facets)
    if total > MAX_FACES_PER_DEGREE:
        raise SizeBoundExceeded(f"product would have {total} top simplices")
    tops = []
    for a in X.facets:
        p = len(a) - 1
        for b in Y.facets:
            q = len(b) - 1
            # a path is fixed by which of its p+q steps move in the X direction
            for xsteps in combinations(range(p + q), p):
                i = j = 0
                simplex = [a[0] * ny + b[0]]
                xs = set(xsteps)
                for step in range(p + q):
                    if step in xs:
                        i += 1
                    else:
                        j += 1
                    simplex.append(a[i] * ny + b[j])
                tops.append(simplex)
    if name is None:
        name = f"{X.name}_x_{Y.name}"
    return from_facets(tops, name=name, flags=X.flags & Y.flags)


def sphere(n: int, name: str | None = None) -> SimplicialComplex:
    """Boundary of the (n+1)-simplex."""
    return from_facets(combinations(range(n + 2), n + 1), name=name or f"s{n}")


# Minimal 6-vertex RP^2 (hemi-icosahedron), found by link-condition edge
# contractions of the antipodal quotient of the subdivided octahedron.
RP2 = [
    (0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
    (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5),
]

# Moebius' 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
T2 = [tuple(sorted(((i + a) % 7, (i + b) % 7, (i + c) % 7)))
      for i in range(7) for a, b, c in ((0, 1, 3), (0, 2, 3))]

# 8-vertex Klein bottle: a 6x6 grid on the square with one side pair glued
# with a flip, reduced by link-condition edge contractions.
KLEIN = [
    (0, 1, 2), (0, 1, 4), (0, 2, 5), (0, 3, 6), (0, 3, 7), (0, 4, 7), (0, 5, 6), (1, 2, 6),
    (1, 4, 5), (1, 5, 7), (1, 6, 7), (2, 3, 5), (2, 3, 6), (3, 5, 7), (4, 5, 6), (4, 6, 7),
]

# 10-vertex genus-2 surface: boundary of a Freudenthal-triangulated block of
# cubes with two holes, reduced by link-condition edge contractions.
SURFACE_GENUS2 = [
    (0, 1, 2), (0, 1, 5), (0, 2, 9), (0, 4, 5), (0, 4, 6), (0, 6, 7), (0, 7, 9), (1, 2, 4),
    (1, 3, 8), (1, 3, 9), (1, 4, 9), (1, 5, 7), (1, 7, 8), (2, 3, 4), (2, 3, 8), (2, 5, 7),
    (2, 5, 9), (2, 6, 7), (2, 6, 8), (3, 4, 6), (3, 6, 9), (4, 5, 9), (6, 8, 9), (7, 8, 9),
]

# 11-vertex RP^3: antipodal quotient of the barycentric subdivision of the
# boundary of the 4-dimensional cross-polytope, reduced by link-condition
# edge contractions.
RP3 = [
    (0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 7), (0, 1, 4, 9), (0, 1, 7, 9), (0, 2, 3, 6),
    (0, 2, 4, 5), (0, 2, 5, 6), (0, 3, 6, 7), (0, 4, 5, 8), (0, 4, 8, 9), (0, 5, 6, 10),
    (0, 5, 8, 10), (0, 6, 7, 10), (0, 7, 9, 10), (0, 8, 9, 10), (1, 2, 3, 10), (1, 2, 4, 10),
    (1, 3, 7, 8), (1, 3, 8, 10), (1, 4, 6, 9), (1, 4, 6, 10), (1, 5, 6, 9), (1, 5, 6, 10),
    (1, 5, 7, 8), (1, 5, 7, 9), (1, 5, 8, 10), (2, 3, 6, 8), (2, 3, 8, 10), (2, 4, 5, 7),
    (2, 4, 7, 10), (2, 5, 6, 9), (2, 5, 7, 9), (2, 6, 8, 9), (2, 7, 9, 10), (2, 8, 9, 10),
    (3, 6, 7, 8), (4, 5, 7, 8), (4, 6, 7, 8), (4, 6, 7, 10), (4, 6, 8, 9),
]

# 22-vertex RP^4, built the same way from the 5-dimensional cross-polytope.
RP4 = [
    (0, 1, 2, 3, 4), (0, 1, 2, 3, 7), (0, 1, 2, 4, 5), (0, 1, 2, 5, 14), (0, 1, 2, 7, 9),
    (0, 1, 2, 9, 20), (0, 1, 2, 14, 19), (0, 1, 2, 19, 20), (0, 1, 3, 4, 6), (0, 1, 3, 6, 8),
    (0, 1, 3, 7, 8), (0, 1, 4, 5, 14), (0, 1, 4, 6, 14), (0, 1, 6, 7, 8), (0, 1, 6, 7, 18),
    (0, 1, 6, 14, 19), (0, 1, 6, 17, 18), (0, 1, 6, 17, 19), (0, 1, 7, 9, 18), (0, 1, 9, 18, 20),
    (0, 1, 17, 18, 20), (0, 1, 17, 19, 20), (0, 2, 3, 4, 10), (0, 2, 3, 7, 12), (0, 2, 3, 10, 12),
    (0, 2, 4, 5, 10), (0, 2, 5, 10, 14), (0, 2, 7, 9, 12), (0, 2, 9, 12, 20), (0, 2, 10, 12, 15),
    (0, 2, 10, 14, 16), (0, 2, 10, 15, 16), (0, 2, 12, 15, 20), (0, 2, 14, 16, 19), (0, 2, 15, 16, 20),
    (0, 2, 16, 19, 20), (0, 3, 4, 6, 8), (0, 3, 4, 8, 11), (0, 3, 4, 10, 11), (0, 3, 7, 8, 12),
    (0, 3, 8, 11, 13), (0, 3, 8, 12, 13), (0, 3, 10, 11, 13), (0, 3, 10, 12, 13), (0, 4, 5, 10, 14),
    (0, 4, 6, 8, 11), (0, 4, 6, 11, 14), (0, 4, 10, 11, 14), (0, 6, 7, 8, 18), (0, 6, 8, 11, 17),
    (0, 6, 8, 17, 18), (0, 6, 11, 14, 17), (0, 6, 14, 17, 19), (0, 7, 8, 12, 18), (0, 7, 9, 12, 18),
    (0, 8, 11, 13, 18), (0, 8, 11, 17, 18), (0, 8, 12, 13, 18), (0, 9, 12, 18, 20), (0, 10, 11, 13, 21),
    (0, 10, 11, 14, 21), (0, 10, 12, 13, 15), (0, 10, 13, 15, 21), (0, 10, 14, 16, 21), (0, 10, 15, 16, 21),
    (0, 11, 13, 18, 21), (0, 11, 14, 17, 21), (0, 11, 17, 18, 21), (0, 12, 13, 15, 20), (0, 12, 13, 18, 20),
    (0, 13, 15, 20, 21), (0, 13, 18, 20, 21), (0, 14, 16, 19, 21), (0, 14, 17, 19, 21), (0, 15, 16, 20, 21),
    (0, 16, 19, 20, 21), (0, 17, 18, 20, 21), (0, 17, 19, 20, 21), (1, 2, 3, 4, 21), (1, 2, 3, 7, 21),
    (1, 2, 4, 5, 21), (1, 2, 5, 13, 16), (1, 2, 5, 13, 21), (1, 2, 5, 14, 16), (1, 2, 7, 9, 21),
    (1, 2, 9, 13, 16), (1, 2, 9, 13, 21), (1, 2, 9, 16, 20), (1, 2, 14, 16, 19), (1, 2, 16, 19, 20),
    (1, 3, 4, 6, 21), (1, 3, 6, 8, 21), (1, 3, 7, 8, 21), (1, 4, 5, 14, 15), (1, 4, 5, 15, 21),
    (1, 4, 6, 14, 15), (1, 4, 6, 15, 21), (1, 5, 13, 14, 15), (1, 5, 13, 14, 16), (1, 5, 13, 15, 21),
    (1, 6, 7, 8, 10), (1, 6, 7, 10, 18), (1, 6, 8, 10, 21), (1, 6, 10, 12, 15), (1, 6, 10, 12, 19),
    (1, 6, 10, 15, 21), (1, 6, 10, 17, 18), (1, 6, 10, 17, 19), (1, 6, 12, 15, 19), (1, 6, 14, 15, 19),
    (1, 7, 8, 10, 21), (1, 7, 9, 10, 18), (1, 7, 9, 10, 21), (1, 9, 10, 11, 20), (1, 9, 10, 11, 21),
    (1, 9, 10, 18, 20), (1, 9, 11, 13, 16), (1, 9, 11, 13, 21), (1, 9, 11, 16, 20), (1, 10, 11, 12, 13),
    (1, 10, 11, 12, 19), (1, 10, 11, 13, 21), (1, 10, 11, 19, 20), (1, 10, 12, 13, 15), (1, 10, 13, 15, 21),
    (1, 10, 17, 18, 20), (1, 10, 17, 19, 20), (1, 11, 12, 13, 16), (1, 11, 12, 16, 19), (1, 11, 16, 19, 20),
    (1, 12, 13, 14, 15), (1, 12, 13, 14, 16), (1, 12, 14, 15, 19), (1, 12, 14, 16, 19), (2, 3, 4, 10, 17),
    (2, 3, 4, 17, 21), (2, 3, 7, 9, 15), (2, 3, 7, 9, 21), (2, 3, 7, 12, 15), (2, 3, 9, 15, 17),
    (2, 3, 9, 17, 21), (2, 3, 10, 12, 17), (2, 3, 12, 15, 17), (2, 4, 5, 10, 18), (2, 4, 5, 18, 21),
    (2, 4, 10, 17, 18), (2, 4, 17, 18, 21), (2, 5, 10, 14, 16), (2, 5, 10, 16, 18), (2, 5, 13, 16, 18),
    (2, 5, 13, 18, 21), (2, 6, 10, 12, 15), (2, 6, 10, 12, 17), (2, 6, 10, 15, 16), (2, 6, 10, 16, 17),
    (2, 6, 12, 15, 17), (2, 6, 15, 16, 17), (2, 7, 9, 12, 15), (2, 9, 12, 15, 20), (2, 9, 13, 16, 17),
    (2, 9, 13, 17, 21), (2, 9, 15, 16, 17), (2, 9, 15, 16, 20), (2, 10, 16, 17, 18), (2, 13, 16, 17, 18),
    (2, 13, 17, 18, 21), (3, 4, 6, 8, 16), (3, 4, 6, 16, 21), (3, 4, 8, 11, 16), (3, 4, 10, 11, 19),
    (3, 4, 10, 17, 19), (3, 4, 11, 16, 19), (3, 4, 16, 19, 21), (3, 4, 17, 19, 21), (3, 6, 8, 16, 21),
    (3, 7, 8, 12, 15), (3, 7, 8, 14, 15), (3, 7, 8, 14, 16), (3, 7, 8, 16, 21), (3, 7, 9, 14, 15),
    (3, 7, 9, 14, 21), (3, 7, 14, 16, 21), (3, 8, 11, 13, 16), (3, 8, 12, 13, 16), (3, 8, 12, 14, 15),
    (3, 8, 12, 14, 16), (3, 9, 14, 15, 19), (3, 9, 14, 19, 21), (3, 9, 15, 17, 19), (3, 9, 17, 19, 21),
    (3, 10, 11, 12, 13), (3, 10, 11, 12, 19), (3, 10, 12, 17, 19), (3, 11, 12, 13, 16), (3, 11, 12, 16, 19),
    (3, 12, 14, 15, 19), (3, 12, 14, 16, 19), (3, 12, 15, 17, 19), (3, 14, 16, 19, 21), (4, 5, 10, 11, 14),
    (4, 5, 10, 11, 20), (4, 5, 10, 18, 20), (4, 5, 11, 14, 15), (4, 5, 11, 15, 20), (4, 5, 15, 18, 20),
    (4, 5, 15, 18, 21), (4, 6, 8, 11, 16), (4, 6, 11, 14, 15), (4, 6, 11, 15, 16), (4, 6, 15, 16, 21),
    (4, 10, 11, 19, 20), (4, 10, 17, 18, 20), (4, 10, 17, 19, 20), (4, 11, 15, 16, 20), (4, 11, 16, 19, 20),
    (4, 15, 16, 20, 21), (4, 15, 18, 20, 21), (4, 16, 19, 20, 21), (4, 17, 18, 20, 21), (4, 17, 19, 20, 21),
    (5, 7, 9, 10, 11), (5, 7, 9, 10, 18), (5, 7, 9, 11, 15), (5, 7, 9, 15, 18), (5, 7, 10, 11, 14),
    (5, 7, 10, 14, 16), (5, 7, 10, 16, 18), (5, 7, 11, 14, 15), (5, 7, 14, 15, 18), (5, 7, 14, 16, 18),
    (5, 9, 10, 11, 20), (5, 9, 10, 18, 20), (5, 9, 11, 15, 20), (5, 9, 15, 18, 20), (5, 13, 14, 15, 18),
    (5, 13, 14, 16, 18), (5, 13, 15, 18, 21), (6, 7, 8, 10, 16), (6, 7, 8, 16, 18), (6, 7, 10, 16, 18),
    (6, 8, 10, 16, 21), (6, 8, 11, 16, 17), (6, 8, 16, 17, 18), (6, 10, 12, 17, 19), (6, 10, 15, 16, 21),
    (6, 10, 16, 17, 18), (6, 11, 14, 15, 17), (6, 11, 15, 16, 17), (6, 12, 15, 17, 19), (6, 14, 15, 17, 19),
    (7, 8, 10, 16, 21), (7, 8, 12, 15, 18), (7, 8, 14, 15, 18), (7, 8, 14, 16, 18), (7, 9, 10, 11, 21),
    (7, 9, 11, 14, 15), (7, 9, 11, 14, 21), (7, 9, 12, 15, 18), (7, 10, 11, 14, 21), (7, 10, 14, 16, 21),
    (8, 11, 13, 16, 18), (8, 11, 16, 17, 18), (8, 12, 13, 14, 15), (8, 12, 13, 14, 16), (8, 12, 13, 15, 18),
    (8, 13, 14, 15, 18), (8, 13, 14, 16, 18), (9, 11, 13, 16, 17), (9, 11, 13, 17, 21), (9, 11, 14, 15, 17),
    (9, 11, 14, 17, 21), (9, 11, 15, 16, 17), (9, 11, 15, 16, 20), (9, 12, 15, 18, 20), (9, 14, 15, 17, 19),
    (9, 14, 17, 19, 21), (11, 13, 16, 17, 18), (11, 13, 17, 18, 21), (12, 13, 15, 18, 20), (13, 15, 18, 20, 21),
]

# 9-vertex CP^2: the unique 4-dimensional pseudomanifold on 9 vertices with 36
# facets that is 3-neighborly and invariant under a free Z/3 x Z/3 action
# (v -> v + (a, b) on vertices labelled 3i + j), found by exhaustive search
# over the 14 facet orbits.
CP2 = [
    (0, 1, 2, 3, 4), (0, 1, 2, 3, 5), (0, 1, 2, 4, 5), (0, 1, 6, 7, 8), (0, 2, 6, 7, 8), (1, 2, 6, 7, 8),
    (3, 4, 5, 6, 7), (3, 4, 5, 6, 8), (3, 4, 5, 7, 8), (0, 1, 3, 4, 6), (0, 1, 3, 6, 7), (0, 2, 3, 5, 8),
    (0, 2, 5, 6, 8), (0, 3, 4, 6, 7), (1, 2, 4, 5, 7), (1, 2, 4, 7, 8), (1, 4, 5, 7, 8), (2, 3, 5, 6, 8),
    (0, 1, 3, 5, 7), (0, 1, 5, 7, 8), (0, 2, 4, 5, 6), (0, 2, 4, 6, 7), (0, 3, 5, 7, 8), (1, 2, 3, 4, 8),
    (1, 2, 3, 6, 8), (1, 3, 4, 6, 8), (2, 4, 5, 6, 7), (0, 1, 4, 5, 6), (0, 1, 5, 6, 8), (0, 2, 3, 4, 8),
    (0, 2, 4, 7, 8), (0, 3, 4, 7, 8), (1, 2, 3, 5, 7), (1, 2, 3, 6, 7), (1, 4, 5, 6, 8), (2, 3, 5, 6, 7),
]


@dataclass(frozen=True)
class Expected:
    """Invariants an entry must reproduce, each tagged with its provenance."""

    betti: tuple[int, ...]
    euler: int
    pd: bool = True
    orientable: bool | None = None
    # degrees in which the total Stiefel-Whitney class is nonzero
    sw_degrees: tuple[int, ...] | None = None
    rule: str | None = None
    provenance: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    complex: SimplicialComplex
    expected: Expected
    construction: str


def _entry(key, complex_, construction, **expected):
    tags = expected.pop("provenance")
    return CatalogEntry(key, complex_.with_name(key), Expected(provenance=MappingProxyType(tags), **expected),
                        construction)


def _build() -> dict[str, CatalogEntry]:
    s1 = sphere(1)
    klein = from_facets(KLEIN, name="klein")
    t2 = from_facets(T2, name="t2")
    d = "derived"
    entries = [
        _entry("s1", s1, "boundary of the 2-simplex",
               betti=(1, 1), euler=0, orientable=True, sw_degrees=(0,), rule="Dim2Rule",
               provenance=dict(betti="trivial", orientable="trivial", sw="trivial", rule="theorem")),
        _entry("s2", sphere(2), "boundary of the 3-simplex",
               betti=(1, 0, 1), euler=2, orientable=True, sw_degrees=(0,), rule="Dim2Rule",
               provenance=dict(betti="trivial", orientable="trivial", sw="trivial", rule="theorem")),
        _entry("s3", sphere(3), "boundary of the 4-simplex",
               betti=(1, 0, 0, 1), euler=0, orientable=True, sw_degrees=(0,), rule="Dim3Rule",
               provenance=dict(betti="trivial", orientable="trivial", sw="trivial", rule="theorem")),
        _entry("s4", sphere(4), "boundary of the 5-simplex",
               betti=(1, 0, 0, 0, 1), euler=2, orientable=True, sw_degrees=(0,), rule="Dim4OrientedRule",
               provenance=dict(betti="trivial", orientable="trivial", sw="trivial", rule="theorem")),
        _entry("rp2", from_facets(RP2), "6-vertex hemi-icosahedron",
               betti=(1, 1, 1), euler=1, orientable=False, sw_degrees=(0, 1, 2), rule="Dim2Rule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("rp3", from_facets(RP3), "11-vertex antipodal quotient",
               betti=(1, 1, 1, 1), euler=0, orientable=True, sw_degrees=(0,), rule="Dim3Rule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("rp4", from_facets(RP4), "22-vertex antipodal quotient",
               betti=(1, 1, 1, 1, 1), euler=1, orientable=False, sw_degrees=(0, 1, 4), rule=None,
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("cp2", from_facets(CP2), "9-vertex 3-neighborly triangulation",
               betti=(1, 0, 1, 0, 1), euler=3, orientable=True, sw_degrees=(0, 2, 4), rule="Dim4OrientedRule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("t2", t2, "7-vertex Moebius torus",
               betti=(1, 2, 1), euler=0, orientable=True, sw_degrees=(0,), rule="Dim2Rule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("klein", klein, "8-vertex Klein bottle",
               betti=(1, 2, 1), euler=0, orientable=False, sw_degrees=(0, 1), rule="Dim2Rule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("surface_genus2", from_facets(SURFACE_GENUS2), "10-vertex genus-2 surface",
               betti=(1, 4, 1), euler=-2, orientable=True, sw_degrees=(0,), rule="Dim2Rule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("t3", product(product(s1, s1), s1), "staircase product s1 x s1 x s1",
               betti=(1, 3, 3, 1), euler=0, orientable=True, sw_degrees=(0,), rule="Dim3Rule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("t4", product(t2, t2), "staircase product t2 x t2",
               betti=(1, 4, 6, 4, 1), euler=0, orientable=True, sw_degrees=(0,), rule="Dim4OrientedRule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("s1_x_klein", product(s1, klein), "staircase product s1 x klein",
               betti=(1, 3, 3, 1), euler=0, orientable=False, sw_degrees=(0, 1), rule="Dim3Rule",
               provenance=dict(betti=d, orientable=d, sw=d, rule="theorem")),
        _entry("solid_delta3", from_facets([(0, 1, 2, 3)]), "solid 3-simplex (not a PD complex)",
               betti=(1, 0, 0, 0), euler=1, pd=False,
               provenance=dict(betti="trivial")),
    ]
    return {e.key: e for e in entries}


_CATALOG: dict[str, CatalogEntry] | None = None


def _catalog() -> dict[str, CatalogEntry]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build()
    return _CATALOG


def list_keys() -> list[str]:
    return sorted(_catalog())


def get(key: str) -> CatalogEntry:
    try:
        return _catalog()[key]
    except KeyError:
        raise UnknownKey(f"unknown catalog key {key!r}; known: {', '.join(list_keys())}") from None


def manifold_keys() -> list[str]:
    return [k for k in list_keys() if _catalog()[k].expected.pd]


def export_json(directory) -> list[str]:
    """Write every entry as ``<key>.json`` in the ingestion format."""
    import json
    import os

    os.makedirs(directory, exist_ok=True)
    written = []
    for key in list_keys():
        path = os.path.join(directory, f"{key}.json")
        with open(path, "w") as fh:
            json.dump(get(key).complex.to_json(), fh, sort_keys=True)
            fh.write("\n")
        written.append(path)
    return written
