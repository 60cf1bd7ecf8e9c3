"""
Weyl groupoid morphisms in canonical form, enumeration, lengths, reduced words.

Convention: the arrow sigma_i^x has target ``x`` and source ``rho_i(x)``.  A
word ``(i_1, ..., i_r)`` read from ``start`` visits the objects
``x_1 = start, x_{k+1} = rho_{i_k}(x_k)`` and evaluates to the composite
``sigma_{i_1}^{x_1} ... sigma_{i_r}^{x_r}`` with target ``start`` and source
``x_{r+1}``.  Its matrix is ``s_{i_1}^{x_1} ... s_{i_r}^{x_r}`` and maps the
roots at the source onto the roots at the target.

>>> from .cartan import builtin
>>> from .roots import generate_real_roots
>>> W = WeylGroupoid(generate_real_roots(builtin("A2-std-3pt")))
>>> m = W.evaluate(Word("x1", (1, 2, 1)))
>>> m.source, m.target, W.length(m)
('x3', 'x1', 3)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .cartan import Matrix, SemiCartanGraph
from .errors import BudgetExceeded, WeylGroupoidError
from .roots import RootSystem, identity_matrix, is_negative, m_entry, mat_mul, mat_vec

__all__ = ["Word", "Morphism", "WeylGroupoid", "format_word", "parse_word"]

DEFAULT_MAX_ELEMENTS = 1_000_000


@dataclass(frozen=True, order=True)
class Word:
    start: str
    letters: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def path(self, graph: SemiCartanGraph) -> tuple[str, ...]:
        """The visited objects ``x_1 .. x_{r+1}``."""
        out = [self.start]
        for i in self.letters:
            out.append(graph.rho(i, out[-1]))
        return tuple(out)

    def __str__(self) -> str:
        return f"{self.start}:{format_word(self.letters)}"


def format_word(letters: tuple[int, ...]) -> str:
    return ",".join(map(str, letters)) if letters else "id"


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "id", "e"):
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad word {text!r}: expected comma-separated generator indices") from None


@dataclass(frozen=True)
class Morphism:
    """A morphism in Hom(source, target) identified by its matrix."""
    target: str
    source: str
    matrix: Matrix

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and self.matrix == identity_matrix(len(self.matrix))


class WeylGroupoid:
    """The (finite) Weyl groupoid of a root system.

    Elements are enumerated lazily on first use by breadth-first search from
    the identities; every length and reduced-word query is answered from that
    table.
    """

    def __init__(self, rs: RootSystem, max_elements: int = DEFAULT_MAX_ELEMENTS):
        self.rs = rs
        self.graph = rs.graph
        self.max_elements = max_elements
        self._refl = {(x, i): rs.reflection(x, i) for x in self.graph.objects for i in self.graph.generators}
        self._reduced: dict[Morphism, tuple[Word, ...]] = {}

    # -- basic morphisms ------------------------------------------------------

    def identity(self, x: str) -> Morphism:
        self.graph.datum.index(x)
        return Morphism(x, x, identity_matrix(self.graph.rank))

    def generator(self, x: str, i: int) -> Morphism:
        """sigma_i^x, target x and source rho_i(x)."""
        return Morphism(x, self.graph.rho(i, x), self._refl[x, i])

    def compose(self, u: Morphism, v: Morphism) -> Morphism | None:
        """``u ∘ v``, or None when the source of u is not the target of v."""
        if u.source != v.target:
            return None
        return Morphism(u.target, v.source, mat_mul(u.matrix, v.matrix))

    def left_multiply(self, i: int, m: Morphism) -> Morphism:
        """sigma_i^{rho_i(t)} ∘ m where t is the target of m."""
        x = self.graph.rho(i, m.target)
        return Morphism(x, m.source, mat_mul(self._refl[x, i], m.matrix))

    def evaluate(self, w: Word) -> Morphism:
        path = w.path(self.graph)
        mat = identity_matrix(self.graph.rank)
        for i, x in zip(w.letters, path):
            mat = mat_mul(mat, self._refl[x, i])
        return Morphism(w.start, path[-1], mat)

    def inversion_count(self, m: Morphism) -> int:
        return sum(1 for a in self.rs.positive(m.source) if is_negative(mat_vec(m.matrix, a)))

    def m(self, x: str, i: int, j: int) -> int:
        return m_entry(self.rs, x, i, j)

    # -- enumeration ----------------------------------------------------------

    @cached_property
    def _table(self) -> dict[Morphism, int]:
        depth: dict[Morphism, int] = {}
        queue = deque()
        for x in self.graph.objects:
            e = self.identity(x)
            depth[e] = 0
            queue.append(e)
        while queue:
            m = queue.popleft()
            for i in self.graph.generators:
                n = self.left_multiply(i, m)
                if n not in depth:
                    depth[n] = depth[m] + 1
                    if len(depth) > self.max_elements:
                        raise BudgetExceeded(f"more than {self.max_elements} morphisms; groupoid is not finite")
                    queue.append(n)
        return depth

    def bfs_depth(self, m: Morphism) -> int:
        return self._table[m]

    def length(self, m: Morphism) -> int:
        """Number of positive roots at the source sent to negative roots."""
        return self.inversion_count(m)

    def __contains__(self, m: Morphism) -> bool:
        return m in self._table

    def __len__(self) -> int:
        return len(self._table)

    def sort_key(self, m: Morphism) -> tuple:
        idx = self.graph.datum.index
        return (idx(m.target), idx(m.source), self._table[m], self.first_reduced_word(m).letters)

    @cached_property
    def elements(self) -> tuple[Morphism, ...]:
        """Every morphism exactly once, ordered by (target, source, length, word)."""
        return tuple(sorted(self._table, key=self.sort_key))

    def hom(self, source: str, target: str) -> list[Morphism]:
        return [m for m in self.elements if m.source == source and m.target == target]

    def with_target(self, x: str) -> list[Morphism]:
        return [m for m in self.elements if m.target == x]

    def longest_element(self, x: str) -> Morphism:
        return max(self.with_target(x), key=lambda m: self._table[m])

    # -- reduced words --------------------------------------------------------

    def reduced_words(self, m: Morphism) -> tuple[Word, ...]:
        """All reduced words of ``m``, lexicographically ordered."""
        if m not in self._reduced:
            if m not in self._table:
                raise WeylGroupoidError("morphism is not in this groupoid")
            depth = self._table[m]
            if depth == 0:
                words = (Word(m.target, ()),)
            else:
                words = []
                for i in self.graph.generators:
                    # m = sigma_i^x ∘ rest  iff  rest = sigma_i^{rho_i(x)} ∘ m is shorter
                    rest = self.left_multiply(i, m)
                    if self._table[rest] == depth - 1:
                        words.extend(Word(m.target, (i,) + w.letters) for w in self.reduced_words(rest))
                words = tuple(words)
            self._reduced[m] = words
        return self._reduced[m]

    def first_reduced_word(self, m: Morphism) -> Word:
        return self.reduced_words(m)[0]

    def is_reduced(self, w: Word) -> bool:
        return self.length(self.evaluate(w)) == len(w)

    # -- braid moves ----------------------------------------------------------

    def braid_moves(self, w: Word):
        """Words obtained from ``w`` by one braid substitution."""
        path = w.path(self.graph)
        letters = w.letters
        for p in range(len(letters)):
            x = path[p]
            for i, j in combinations(self.graph.generators, 2):
                m = self.m(x, i, j)
                if m == 0 or p + m > len(letters):
                    continue
                block = letters[p:p + m]
                alt_ij = tuple(i if k % 2 == 0 else j for k in range(m))
                alt_ji = tuple(j if k % 2 == 0 else i for k in range(m))
                if block == alt_ij:
                    yield Word(w.start, letters[:p] + alt_ji + letters[p + m:])
                elif block == alt_ji:
                    yield Word(w.start, letters[:p] + alt_ij + letters[p + m:])

    def braid_class(self, w: Word) -> frozenset[Word]:
        seen = {w}
        todo = [w]
        while todo:
            for v in self.braid_moves(todo.pop()):
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return frozenset(seen)

    def braid_equivalent(self, w1: Word, w2: Word) -> bool:
        if w1.start != w2.start or len(w1) != len(w2):
            return False
        return w2 in self.braid_class(w1)
