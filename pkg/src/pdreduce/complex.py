"""Finite abstract simplicial complexes and their boundary operators."""

from __future__ import annotations

import json
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

from .algebra.f2 import F2Matrix
from .algebra.integer import IntMatrix
from .errors import DegreeOutOfRange, InvalidCharacter, MalformedInput, SizeBoundExceeded

MAX_DIM = 7
MAX_FACES_PER_DEGREE = 100_000
KNOWN_FLAGS = frozenset({"manifold", "oriented-input"})

Simplex = tuple[int, ...]


class SimplicialComplex:
    """A finite simplicial complex on vertices ``0..V-1``.

    Simplices are strictly increasing vertex tuples; the vertex order fixes
    orientations and the front/back face conventions used everywhere else.
    Instances are immutable.
    """

    __slots__ = ("name", "facets", "faces", "flags", "_index", "_hash", "_cache")

    def __init__(self, name: str, facets: tuple[Simplex, ...], faces: tuple[tuple[Simplex, ...], ...],
                 flags: frozenset[str]):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "flags", flags)
        object.__setattr__(self, "_index", tuple(
            MappingProxyType({s: i for i, s in enumerate(fk)}) for fk in faces))
        object.__setattr__(self, "_hash", hash((name, faces, flags)))
        # memo for derived data (bases, rings); entries are immutable and idempotent
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, key, value):
        raise AttributeError("SimplicialComplex is immutable")

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    @property
    def num_vertices(self) -> int:
        return len(self.faces[0])

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fk) for fk in self.faces)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(fk) for k, fk in enumerate(self.faces))

    def index(self, k: int) -> Mapping[Simplex, int]:
        """Position of each k-simplex inside ``faces[k]``."""
        return self._index[k]

    def n_faces(self, k: int) -> int:
        return len(self.faces[k]) if 0 <= k <= self.dim else 0

    def with_flags(self, flags: Iterable[str]) -> "SimplicialComplex":
        flags = _check_flags(flags)
        return SimplicialComplex(self.name, self.facets, self.faces, self.flags | flags)

    def with_name(self, name: str) -> "SimplicialComplex":
        return SimplicialComplex(name, self.facets, self.faces, self.flags)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if self is other:
            return True
        return self._hash == other._hash and (self.name, self.faces, self.flags) == (
            other.name, other.faces, other.flags)

    def __hash__(self):
        return self._hash

    def memo(self, key, build):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = build()
            return value

    def __repr__(self):
        return f"SimplicialComplex({self.name!r}, f={self.f_vector()})"

    def to_json(self) -> dict:
        return {"name": self.name, "facets": [list(f) for f in self.facets],
                "flags": sorted(self.flags)}


def _check_flags(flags: Iterable[str]) -> frozenset[str]:
    flags = frozenset(flags)
    unknown = flags - KNOWN_FLAGS
    if unknown:
        raise MalformedInput(f"unknown flags: {sorted(unknown)}")
    return flags


def from_facets(facets: Iterable[Iterable[int]], name: str = "", flags: Iterable[str] = ()) -> SimplicialComplex:
    """Build the downward closure of ``facets``.

    Vertex ids are compacted to ``0..V-1`` keeping their relative order;
    input sets that are faces of other inputs are dropped from ``facets``.
    """
    flags = _check_flags(flags)
    raw = []
    for facet in facets:
        facet = list(facet)
        if not facet:
            raise MalformedInput("empty facet")
        for v in facet:
            if isinstance(v, bool) or not isinstance(v, int):
                raise MalformedInput(f"vertex id {v!r} is not an integer")
            if v < 0:
                raise MalformedInput(f"vertex id {v} is negative")
        if len(set(facet)) != len(facet):
            raise MalformedInput(f"facet {facet} repeats a vertex")
        raw.append(tuple(sorted(facet)))
    if not raw:
        raise MalformedInput("no facets")
    if max(map(len, raw)) - 1 > MAX_DIM:
        raise SizeBoundExceeded(f"dimension exceeds {MAX_DIM}")

    relabel = {v: i for i, v in enumerate(sorted({v for f in raw for v in f}))}
    tops = sorted({tuple(relabel[v] for v in f) for f in raw}, key=lambda s: (-len(s), s))

    dim = len(tops[0]) - 1
    levels: list[set[Simplex]] = [set() for _ in range(dim + 1)]
    maximal = []
    for f in tops:
        if f in levels[len(f) - 1]:
            continue
        maximal.append(f)
        for k in range(len(f)):
            levels[k].update(combinations(f, k + 1))
            if len(levels[k]) > MAX_FACES_PER_DEGREE:
                raise SizeBoundExceeded(f"more than {MAX_FACES_PER_DEGREE} faces in degree {k}")
    faces = tuple(tuple(sorted(level)) for level in levels)
    return SimplicialComplex(name, tuple(sorted(maximal)), faces, flags)


def from_json(doc) -> SimplicialComplex:
    """Parse the JSON ingestion document (a dict, a JSON string, or bytes)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedInput("input document must be a JSON object")
    extra = set(doc) - {"name", "facets", "flags"}
    if extra:
        raise MalformedInput(f"unknown fields: {sorted(extra)}")
    if "facets" not in doc:
        raise MalformedInput("missing 'facets'")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise MalformedInput("'name' must be a string")
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise MalformedInput("'facets' must be a list of lists")
    flags = doc.get("flags", [])
    if not isinstance(flags, list) or not all(isinstance(f, str) for f in flags):
        raise MalformedInput("'flags' must be a list of strings")
    return from_facets(facets, name=name, flags=flags)


def load(path) -> SimplicialComplex:
    with open(path, "rb") as fh:
        return from_json(fh.read())


def _check_degree(X: SimplicialComplex, k: int):
    if not 1 <= k <= X.dim:
        raise DegreeOutOfRange(f"boundary degree {k} outside 1..{X.dim}")


def boundary_matrix_f2(X: SimplicialComplex, k: int) -> F2Matrix:
    """Boundary ``C_k -> C_{k-1}`` over F2; rows ``faces[k-1]``, columns ``faces[k]``."""
    _check_degree(X, k)
    idx = X.index(k - 1)
    cols = []
    for s in X.faces[k]:
        c = 0
        for i in range(k + 1):
            c |= 1 << idx[s[:i] + s[i + 1:]]
        cols.append(c)
    return F2Matrix.from_columns(len(X.faces[k - 1]), cols)


def boundary_columns_f2(X: SimplicialComplex, k: int) -> list[int]:
    """Columns of the F2 boundary as packed ints (row bits over ``faces[k-1]``)."""
    _check_degree(X, k)
    idx = X.index(k - 1)
    out = []
    for s in X.faces[k]:
        c = 0
        for i in range(k + 1):
            c |= 1 << idx[s[:i] + s[i + 1:]]
        out.append(c)
    return out


def coboundary_columns_f2(X: SimplicialComplex, k: int) -> list[int]:
    """Coboundary ``C^k -> C^{k+1}`` by columns: column ``j`` is delta of the k-simplex j."""
    out = [0] * len(X.faces[k])
    if k + 1 > X.dim:
        return out
    idx = X.index(k)
    for j, s in enumerate(X.faces[k + 1]):
        bit = 1 << j
        for i in range(k + 2):
            out[idx[s[:i] + s[i + 1:]]] |= bit
    return out


class Character:
    """A Z/2-valued 1-cocycle on the edges of a complex."""

    __slots__ = ("complex", "values")

    def __init__(self, X: SimplicialComplex, values: Mapping[Simplex, int]):
        edges = X.index(1) if X.dim >= 1 else {}
        vals = {}
        for e, v in values.items():
            e = tuple(e)
            if e not in edges:
                raise InvalidCharacter(f"{e} is not an edge of {X.name or 'the complex'}")
            if v not in (0, 1):
                raise InvalidCharacter(f"value {v!r} on edge {e} is not 0 or 1")
            vals[e] = v
        full = {e: vals.get(e, 0) for e in (X.faces[1] if X.dim >= 1 else ())}
        if X.dim >= 2:
            for a, b, c in X.faces[2]:
                if full[(a, b)] ^ full[(b, c)] ^ full[(a, c)]:
                    raise InvalidCharacter(f"cocycle condition fails on triangle {(a, b, c)}")
        object.__setattr__(self, "complex", X)
        object.__setattr__(self, "values", MappingProxyType(full))

    def __setattr__(self, key, value):
        raise AttributeError("Character is immutable")

    @classmethod
    def zero(cls, X: SimplicialComplex) -> "Character":
        return cls(X, {})

    @classmethod
    def from_vector(cls, X: SimplicialComplex, v: int) -> "Character":
        return cls(X, {e: (v >> i) & 1 for i, e in enumerate(X.faces[1])})

    def vector(self) -> int:
        return sum(1 << i for i, e in enumerate(self.complex.faces[1]) if self.values[e])

    def support(self) -> list[Simplex]:
        return [e for e in self.complex.faces[1] if self.values[e]]

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def __call__(self, a: int, b: int) -> int:
        return self.values[(a, b) if a < b else (b, a)]

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.complex is other.complex and dict(self.values) == dict(other.values)

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))

    def __repr__(self):
        return f"Character(support={self.support()})"


def boundary_matrix_z(X: SimplicialComplex, k: int, c: Character | None = None) -> IntMatrix:
    """Integral boundary ``C_k -> C_{k-1}``, optionally twisted by a character.

    Face ``i`` of ``[v0..vk]`` carries ``(-1)**i``; with a twist the 0-th face
    term is also multiplied by ``(-1)**c(v0 v1)``, transporting the fiber from
    basepoint v0 to v1.
    """
    _check_degree(X, k)
    if c is not None and c.complex is not X and c.complex != X:
        raise InvalidCharacter("character belongs to a different complex")
    idx = X.index(k - 1)
    cols = []
    for s in X.faces[k]:
        col = {}
        for i in range(k + 1):
            sign = -1 if i & 1 else 1
            if i == 0 and c is not None and c.values[(s[0], s[1])]:
                sign = -sign
            col[idx[s[:i] + s[i + 1:]]] = sign
        cols.append(col)
    return IntMatrix(len(X.faces[k - 1]), len(X.faces[k]), cols)
