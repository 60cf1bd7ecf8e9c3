"""
Simple reflections, real-root closure, and the generalized root system axioms.

Root vectors are integer tuples of coefficients in the simple roots.  A matrix
``M`` acts on column vectors, ``M[r][c]`` being the coefficient of alpha_{r+1}
in the image of alpha_{c+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .cartan import Matrix, SemiCartanGraph, Violation
from .errors import BudgetExceeded

__all__ = [
    "RootVector", "RootSystem", "simple_reflection", "generate_real_roots",
    "check_grs_axioms", "m_entry", "identity_matrix", "mat_mul", "mat_vec",
    "simple_root", "format_root",
]

RootVector = tuple[int, ...]

DEFAULT_MAX_ROOTS = 10_000


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(b)
    cols = list(zip(*b))
    return tuple(tuple(sum(row[k] * col[k] for k in range(n)) for col in cols) for row in a)


def mat_vec(a: Matrix, v: RootVector) -> RootVector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def simple_root(rank: int, i: int) -> RootVector:
    return tuple(int(k == i - 1) for k in range(rank))


def neg(v: RootVector) -> RootVector:
    return tuple(-c for c in v)


def is_positive(v: RootVector) -> bool:
    return any(v) and all(c >= 0 for c in v)


def is_negative(v: RootVector) -> bool:
    return any(v) and all(c <= 0 for c in v)


def root_order_key(v: RootVector) -> tuple:
    # graded, then alpha_1 before alpha_2 before ...
    return (sum(v), tuple(-c for c in v))


def format_root(v: RootVector) -> str:
    return " + ".join(f"{c}*a{k}" for k, c in enumerate(v, start=1))


def simple_reflection(graph: SemiCartanGraph, x: str, i: int) -> Matrix:
    """Matrix of s_i^x: alpha_j -> alpha_j - c^x_{ij} alpha_i."""
    row = graph.cartan_matrix(x)[i - 1]
    n = graph.rank
    return tuple(
        tuple(int(r == c) - (row[c] if r == i - 1 else 0) for c in range(n))
        for r in range(n)
    )


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Per-object root sets over a semi-Cartan graph.

    ``roots[x]`` is the full set Delta^x; ``positive(x)`` lists the
    nonnegative roots in graded order.  Constructing one does not check the
    axioms, use :func:`check_grs_axioms` for that.
    """
    graph: SemiCartanGraph
    roots: Mapping[str, frozenset[RootVector]]

    @classmethod
    def from_sets(cls, graph: SemiCartanGraph,
                  roots: Mapping[str, Iterable[RootVector]]) -> RootSystem:
        return cls(graph, {x: frozenset(tuple(r) for r in roots[x]) for x in graph.objects})

    def positive(self, x: str) -> tuple[RootVector, ...]:
        return tuple(sorted((r for r in self.roots[x] if all(c >= 0 for c in r)),
                            key=root_order_key))

    def reflection(self, x: str, i: int) -> Matrix:
        return simple_reflection(self.graph, x, i)


def generate_real_roots(graph: SemiCartanGraph, max_roots: int = DEFAULT_MAX_ROOTS) -> RootSystem:
    """Close ``{±alpha_j}`` at every object under all simple reflections."""
    n = graph.rank
    found: dict[str, set[RootVector]] = {x: set() for x in graph.objects}
    work: list[tuple[str, RootVector]] = []

    def add(x, r):
        if r not in found[x]:
            found[x].add(r)
            if len(found[x]) > max_roots:
                raise BudgetExceeded(
                    f"more than {max_roots} roots at {x}; the root system is not finite")
            work.append((x, r))

    for x in graph.objects:
        for j in graph.generators:
            a = simple_root(n, j)
            add(x, a)
            add(x, neg(a))
    refl = {(x, i): simple_reflection(graph, x, i) for x in graph.objects for i in graph.generators}
    while work:
        x, r = work.pop()
        for i in graph.generators:
            add(graph.rho(i, x), mat_vec(refl[x, i], r))
    return RootSystem.from_sets(graph, found)


def m_entry(rs: RootSystem, x: str, i: int, j: int) -> int:
    """Number of positive roots at ``x`` supported on ``{alpha_i, alpha_j}``."""
    return sum(
        1 for r in rs.roots[x]
        if all(c >= 0 for c in r) and all(c == 0 for k, c in enumerate(r, start=1) if k not in (i, j))
    )


def check_grs_axioms(rs: RootSystem) -> list[Violation]:
    g = rs.graph
    n = g.rank
    out = []
    for x in g.objects:
        delta = rs.roots[x]
        for r in sorted(delta):
            if not (is_positive(r) or is_negative(r)):
                out.append(Violation("sign", f"{format_root(r)} at {x} is neither positive nor negative"))
            elif neg(r) not in delta:
                out.append(Violation("sign", f"-({format_root(r)}) missing at {x}"))
        for i in g.generators:
            a = simple_root(n, i)
            on_line = {r for r in delta if all(c == 0 for k, c in enumerate(r, start=1) if k != i)}
            if on_line != {a, neg(a)}:
                extra = sorted(on_line - {a, neg(a)})
                what = f"extra {format_root(extra[0])}" if extra else "missing ±alpha_" + str(i)
                out.append(Violation("simple-line", f"Delta^{x} ∩ Z alpha_{i} != {{±alpha_{i}}} ({what})"))
        for i in g.generators:
            y = g.rho(i, x)
            image = {mat_vec(rs.reflection(x, i), r) for r in delta}
            if image != rs.roots[y]:
                out.append(Violation("transport", f"s_{i}^{x}(Delta^{x}) != Delta^{y}"))
        for i, j in combinations(g.generators, 2):
            m = m_entry(rs, x, i, j)
            z = x
            for _ in range(m):
                z = g.rho(i, g.rho(j, z))
            if z != x:
                out.append(Violation("coxeter", f"(rho_{i} rho_{j})^{m}({x}) = {z} != {x}"))
    return out
