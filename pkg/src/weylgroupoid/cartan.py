"""
Basic data, semi-Cartan graphs, coverings, and the built-in graphs.

Generators are 1-based integers ``1..rank`` everywhere in the public API;
matrices are tuples of rows, so ``cartan_entry(x, i, j)`` reads
``C^x[i-1][j-1]``.  Objects are opaque strings kept in declaration order.

>>> g = builtin("A2-std-3pt")
>>> g.objects
('x1', 'x2', 'x3')
>>> g.rho(2, "x1"), g.rho(1, "x2"), g.rho(1, "x1")
('x2', 'x3', 'x1')
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .errors import GraphSyntaxError, UnknownName, ValidationError

__all__ = [
    "Matrix", "Violation", "BasicDatum", "SemiCartanGraph", "Covering",
    "parse_cartan_graph", "serialize_cartan_graph", "builtin", "BUILTIN_NAMES",
    "verify_covering", "disjoint_copies",
]

Matrix = tuple[tuple[int, ...], ...]


class Violation(NamedTuple):
    """One entry of a validation report."""
    invariant: str
    detail: str

    def __str__(self) -> str:
        return f"{self.invariant}: {self.detail}"


@dataclass(frozen=True)
class BasicDatum:
    """A finite object set with one involution per generator.

    ``rho_table[i-1][k]`` is the image of ``objects[k]`` under rho_i.
    """
    rank: int
    objects: tuple[str, ...]
    rho_table: tuple[tuple[str, ...], ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {x: k for k, x in enumerate(self.objects)})
        problems = self.violations()
        if problems:
            raise ValidationError(*problems[0])

    def violations(self) -> list[Violation]:
        out = []
        if self.rank < 1:
            out.append(Violation("rank", f"rank must be positive, got {self.rank}"))
        if not self.objects:
            out.append(Violation("objects", "object set is empty"))
        if len(self._index) != len(self.objects):
            out.append(Violation("objects", "object identifiers are not unique"))
        if len(self.rho_table) != self.rank:
            out.append(Violation("rho", f"expected {self.rank} involutions, got {len(self.rho_table)}"))
            return out
        for i, row in enumerate(self.rho_table, start=1):
            if len(row) != len(self.objects) or any(y not in self._index for y in row):
                out.append(Violation("rho", f"rho_{i} is not a map on the object set"))
                continue
            for x, y in zip(self.objects, row):
                if row[self._index[y]] != x:
                    out.append(Violation("involution", f"rho_{i}(rho_{i}({x})) != {x}"))
        return out

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownName(f"unknown object {x!r}") from None

    def rho(self, i: int, x: str) -> str:
        return self.rho_table[i - 1][self.index(x)]

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    def is_loop(self, i: int, x: str) -> bool:
        return self.rho(i, x) == x

    def arrows(self) -> list[tuple[str, int, str]]:
        """The quiver arrows ``(x, i, rho_i(x))``: target x, source rho_i(x)."""
        return [(x, i, self.rho(i, x)) for x in self.objects for i in self.generators]

    def edges(self) -> list[tuple[int, str, str]]:
        """Non-loop edges ``(i, a, b)`` with ``a`` declared before ``b``."""
        out = []
        for i in self.generators:
            for x in self.objects:
                y = self.rho(i, x)
                if self.index(x) < self.index(y):
                    out.append((i, x, y))
        return out


def _is_gcm(c: Matrix) -> str | None:
    n = len(c)
    for i in range(n):
        if c[i][i] != 2:
            return f"diagonal entry ({i + 1},{i + 1}) is {c[i][i]}, not 2"
        for j in range(n):
            if i == j:
                continue
            if c[i][j] > 0:
                return f"off-diagonal entry ({i + 1},{j + 1}) is positive"
            if (c[i][j] == 0) != (c[j][i] == 0):
                return f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) do not vanish together"
    return None


@dataclass(frozen=True)
class SemiCartanGraph:
    """A basic datum with a compatible generalized Cartan matrix per object."""
    datum: BasicDatum
    cartan: tuple[Matrix, ...]  # aligned with datum.objects
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        problems = self.violations()
        if problems:
            raise ValidationError(*problems[0])

    def violations(self) -> list[Violation]:
        d = self.datum
        out = []
        if len(self.cartan) != len(d.objects):
            return [Violation("cartan", "one Cartan matrix per object is required")]
        for x, c in zip(d.objects, self.cartan):
            if len(c) != d.rank or any(len(row) != d.rank for row in c):
                out.append(Violation("cartan", f"C^{x} is not {d.rank}x{d.rank}"))
                continue
            reason = _is_gcm(c)
            if reason:
                out.append(Violation("gcm", f"C^{x}: {reason}"))
        if out:
            return out
        for x in d.objects:
            for i in d.generators:
                y = d.rho(i, x)
                for j in d.generators:
                    a, b = self.cartan_entry(x, i, j), self.cartan_entry(y, i, j)
                    if a != b:
                        out.append(Violation(
                            "compatibility",
                            f"c^{x}_{i}{j} = {a} but c^{y}_{i}{j} = {b} where {y} = rho_{i}({x})",
                        ))
        return out

    # conveniences forwarding to the datum
    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def objects(self) -> tuple[str, ...]:
        return self.datum.objects

    @property
    def generators(self) -> range:
        return self.datum.generators

    def rho(self, i: int, x: str) -> str:
        return self.datum.rho(i, x)

    def is_loop(self, i: int, x: str) -> bool:
        return self.datum.is_loop(i, x)

    def cartan_matrix(self, x: str) -> Matrix:
        return self.cartan[self.datum.index(x)]

    def cartan_entry(self, x: str, i: int, j: int) -> int:
        return self.cartan_matrix(x)[i - 1][j - 1]

    @classmethod
    def from_edges(cls, rank: int, objects: Iterable[str],
                   edges: Iterable[tuple[int, str, str]],
                   cartan: Mapping[str, Iterable[Iterable[int]]],
                   name: str | None = None) -> SemiCartanGraph:
        """Build a graph from non-loop edges; unlisted objects are fixed by rho_i."""
        objects = tuple(objects)
        known = set(objects)
        maps = [dict() for _ in range(rank)]
        for i, a, b in edges:
            if not 1 <= i <= rank:
                raise ValidationError("rho", f"edge label {i} outside 1..{rank}")
            for z in (a, b):
                if z not in known:
                    raise ValidationError("objects", f"edge mentions undeclared object {z!r}")
            m = maps[i - 1]
            for u, v in ((a, b), (b, a)):
                if m.get(u, v) != v:
                    raise ValidationError(
                        "involution", f"rho_{i}({u}) assigned both {m[u]} and {v}")
                m[u] = v
        rho_table = tuple(tuple(m.get(x, x) for x in objects) for m in maps)
        missing = [x for x in objects if x not in cartan]
        if missing:
            raise ValidationError("cartan", f"no Cartan matrix for {missing[0]!r}")
        extra = [x for x in cartan if x not in known]
        if extra:
            raise ValidationError("objects", f"Cartan matrix for undeclared object {extra[0]!r}")
        mats = tuple(tuple(tuple(int(v) for v in row) for row in cartan[x]) for x in objects)
        return cls(BasicDatum(rank, objects, rho_table), mats, name=name)

    def is_standard(self) -> bool:
        return len(set(self.cartan)) == 1


def parse_cartan_graph(text: str, name: str | None = None) -> SemiCartanGraph:
    """Parse and validate a JSON graph document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphSyntaxError("document must be a JSON object")
    for key in ("rank", "objects", "cartan"):
        if key not in doc:
            raise GraphSyntaxError(f"missing key {key!r}")
    rank, objects, cartan = doc["rank"], doc["objects"], doc["cartan"]
    edges = doc.get("edges", [])
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise GraphSyntaxError("'rank' must be an integer")
    if not isinstance(objects, list) or not all(isinstance(x, str) for x in objects):
        raise GraphSyntaxError("'objects' must be a list of strings")
    if not isinstance(cartan, dict):
        raise GraphSyntaxError("'cartan' must map objects to matrices")
    for x, mat in cartan.items():
        if not (isinstance(mat, list) and all(
                isinstance(row, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in row)
                for row in mat)):
            raise GraphSyntaxError(f"Cartan matrix of {x!r} must be a list of integer rows")
    if not isinstance(edges, list):
        raise GraphSyntaxError("'edges' must be a list")
    parsed_edges = []
    for e in edges:
        if not (isinstance(e, dict) and isinstance(e.get("i"), int) and isinstance(e.get("pair"), list)
                and len(e["pair"]) == 2 and all(isinstance(z, str) for z in e["pair"])):
            raise GraphSyntaxError(f"malformed edge {e!r}")
        parsed_edges.append((e["i"], e["pair"][0], e["pair"][1]))
    if len(set(objects)) != len(objects):
        raise ValidationError("objects", "object identifiers are not unique")
    return SemiCartanGraph.from_edges(rank, objects, parsed_edges, cartan, name=name)


def graph_to_document(g: SemiCartanGraph) -> dict:
    return {
        "rank": g.rank,
        "objects": list(g.objects),
        "edges": [{"i": i, "pair": [a, b]} for i, a, b in g.datum.edges()],
        "cartan": {x: [list(row) for row in g.cartan_matrix(x)] for x in g.objects},
    }


def serialize_cartan_graph(g: SemiCartanGraph) -> str:
    return json.dumps(graph_to_document(g), indent=2) + "\n"


# -- built-ins ---------------------------------------------------------------

_A1A1 = ((2, 0), (0, 2))
_A2 = ((2, -1), (-1, 2))
_B2 = ((2, -2), (-1, 2))
_G2 = ((2, -3), (-1, 2))

# (objects, edges (i, a, b), matrices)
_BUILTINS = {
    "A1xA1-1pt": (("x",), (), (_A1A1,)),
    "A2-1pt": (("x",), (), (_A2,)),
    "B2-1pt": (("x",), (), (_B2,)),
    "G2-1pt": (("x",), (), (_G2,)),
    "A2-std-3pt": (("x1", "x2", "x3"), ((2, "x1", "x2"), (1, "x2", "x3")), (_A2,) * 3),
    "B2-std-2pt": (("x1", "x2"), ((2, "x1", "x2"),), (_B2,) * 2),
    "row10": (
        ("x1", "x2", "x3"),
        ((1, "x1", "x2"), (2, "x2", "x3")),
        (((2, -2), (-2, 2)), ((2, -2), (-1, 2)), ((2, -4), (-1, 2))),
    ),
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> SemiCartanGraph:
    try:
        objects, edges, mats = _BUILTINS[name]
    except KeyError:
        raise UnknownName(f"unknown built-in graph {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    return SemiCartanGraph.from_edges(2, objects, edges, dict(zip(objects, mats)), name=name)


# -- coverings ---------------------------------------------------------------

@dataclass(frozen=True)
class Covering:
    """A candidate covering ``fiber_map: source_graph -> target_graph``."""
    source_graph: SemiCartanGraph
    target_graph: SemiCartanGraph
    fiber_map: Mapping[str, str]

    def fiber(self, x: str) -> list[str]:
        return [y for y in self.source_graph.objects if self.fiber_map.get(y) == x]

    @classmethod
    def identity(cls, g: SemiCartanGraph) -> Covering:
        return cls(g, g, {x: x for x in g.objects})


def verify_covering(c: Covering) -> list[Violation]:
    """Every violated covering condition; an empty list means ``c`` is a covering."""
    src, tgt, f = c.source_graph, c.target_graph, c.fiber_map
    out = []
    if src.rank != tgt.rank:
        return [Violation("rank", f"ranks differ: {src.rank} vs {tgt.rank}")]
    for y in src.objects:
        if y not in f:
            out.append(Violation("map", f"{y} has no image"))
        elif f[y] not in tgt.objects:
            out.append(Violation("map", f"{y} maps to unknown object {f[y]!r}"))
    if out:
        return out
    for x in tgt.objects:
        if not c.fiber(x):
            out.append(Violation("surjective", f"{x} is not in the image"))
    for y in src.objects:
        for i in src.generators:
            lhs, rhs = tgt.rho(i, f[y]), f[src.rho(i, y)]
            if lhs != rhs:
                out.append(Violation(
                    "equivariance", f"rho_{i}(F({y})) = {lhs} but F(rho_{i}({y})) = {rhs}"))
        if src.cartan_matrix(y) != tgt.cartan_matrix(f[y]):
            out.append(Violation("cartan", f"C^{f[y]} != C^{y}"))
    return out


def disjoint_copies(g: SemiCartanGraph, n: int) -> Covering:
    """The covering of ``g`` by ``n`` disjoint copies of itself."""
    objects = [f"{x}#{k}" for k in range(1, n + 1) for x in g.objects]
    edges = [(i, f"{a}#{k}", f"{b}#{k}") for k in range(1, n + 1) for i, a, b in g.datum.edges()]
    cartan = {f"{x}#{k}": g.cartan_matrix(x) for k in range(1, n + 1) for x in g.objects}
    src = SemiCartanGraph.from_edges(g.rank, objects, edges, cartan,
                                     name=f"{n}x{g.name}" if g.name else None)
    return Covering(src, g, {f"{x}#{k}": x for k in range(1, n + 1) for x in g.objects})
