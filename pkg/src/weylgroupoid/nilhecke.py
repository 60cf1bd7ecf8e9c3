"""
The nil-Hecke algebra of a finite Weyl groupoid in its T_w basis.

Elements are sparse maps from morphisms to nonzero coefficients.  Products are
computed from the basis rule

    T_u T_v = T_{u∘v}  if source(u) = target(v) and l(u∘v) = l(u) + l(v),
              0        otherwise,

never by rewriting words.  The regular representation on the groupoid algebra
(:func:`lambda_action`) is computed separately, letter by letter, so it can be
used to check the multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterator, Mapping

from .cartan import Covering, Violation, verify_covering
from .errors import GroupoidMismatch, InvalidCovering, RingMismatch
from .groupoid import Morphism, WeylGroupoid, Word, format_word
from .polynomial import Polynomial

__all__ = [
    "CoefficientRing", "INTEGERS", "polynomial_ring", "NilHeckeAlgebra", "NilHeckeElement",
    "multiply", "lambda_action", "phi", "covering_embed", "defining_relation_violations",
]


@dataclass(frozen=True)
class CoefficientRing:
    """A commutative ring with unit, given by its zero and one.

    Carriers are Python objects supporting ``+``, ``*``, ``==`` and truth
    testing (zero is falsy); ``int`` and :class:`Polynomial` qualify.
    """
    name: str
    zero: Any
    one: Any


INTEGERS = CoefficientRing("ZZ", 0, 1)


def polynomial_ring(nvars: int) -> CoefficientRing:
    return CoefficientRing(f"ZZ[t1..t{nvars}]", Polynomial.zero(nvars), Polynomial.one(nvars))


class NilHeckeAlgebra:
    def __init__(self, groupoid: WeylGroupoid, ring: CoefficientRing = INTEGERS):
        self.groupoid = groupoid
        self.ring = ring

    @classmethod
    def over_polynomials(cls, groupoid: WeylGroupoid) -> NilHeckeAlgebra:
        return cls(groupoid, polynomial_ring(groupoid.graph.rank))

    def element(self, terms: Mapping[Morphism, Any] = ()) -> NilHeckeElement:
        return NilHeckeElement(self, dict(terms))

    def zero(self) -> NilHeckeElement:
        return self.element()

    def unit(self) -> NilHeckeElement:
        return self.element({self.groupoid.identity(x): self.ring.one for x in self.groupoid.graph.objects})

    def basis(self, m: Morphism) -> NilHeckeElement:
        """T_m."""
        if m not in self.groupoid:
            raise GroupoidMismatch("morphism does not belong to this groupoid")
        return self.element({m: self.ring.one})

    def idempotent(self, x: str) -> NilHeckeElement:
        """e^x = T_{id_x}."""
        return self.basis(self.groupoid.identity(x))

    def generator(self, x: str, i: int) -> NilHeckeElement:
        """n_i^x = T_{sigma_i^x}."""
        return self.basis(self.groupoid.generator(x, i))

    def word_product(self, w: Word) -> NilHeckeElement:
        """n_{i_1}^{x_1} n_{i_2}^{x_2} ... along the object path of ``w``."""
        path = w.path(self.groupoid.graph)
        out = self.idempotent(w.start)
        for i, x in zip(w.letters, path):
            out = out * self.generator(x, i)
        return out

    def basis_elements(self) -> list[NilHeckeElement]:
        return [self.basis(m) for m in self.groupoid.elements]


class NilHeckeElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: NilHeckeAlgebra, terms: dict[Morphism, Any]):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def ring(self) -> CoefficientRing:
        return self.algebra.ring

    def coefficient(self, m: Morphism):
        return self.terms.get(m, self.ring.zero)

    def support(self) -> frozenset[Morphism]:
        return frozenset(self.terms)

    def __iter__(self) -> Iterator[tuple[Morphism, Any]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: NilHeckeElement):
        if self.algebra.ring != other.algebra.ring:
            raise RingMismatch(f"{self.algebra.ring.name} vs {other.algebra.ring.name}")
        if self.algebra.groupoid is not other.algebra.groupoid:
            raise GroupoidMismatch("elements belong to different groupoids")

    def __add__(self, other):
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc[m] + c if m in acc else c
        return NilHeckeElement(self.algebra, acc)

    def __neg__(self):
        return NilHeckeElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NilHeckeElement):
            return multiply(self, other)
        return NilHeckeElement(self.algebra, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, scalar):
        return NilHeckeElement(self.algebra, {m: scalar * c for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        return (self.algebra.groupoid is other.algebra.groupoid
                and self.algebra.ring == other.algebra.ring and self.terms == other.terms)

    __hash__ = None

    def sorted_terms(self) -> list[tuple[Morphism, Any]]:
        W = self.algebra.groupoid
        return sorted(self.terms.items(),
                      key=lambda mc: (W.bfs_depth(mc[0]), W.first_reduced_word(mc[0]).letters,
                                      W.sort_key(mc[0])))

    def format(self) -> str:
        if not self.terms:
            return "0"
        W = self.algebra.groupoid
        lines = []
        for m, c in self.sorted_terms():
            coeff = c.format(explicit=True) if isinstance(c, Polynomial) else str(c)
            word = format_word(W.first_reduced_word(m).letters)
            lines.append(f"{coeff} * T[{m.source}->{m.target}: {word}]")
        return "\n".join(lines)

    def __repr__(self):
        return f"NilHeckeElement({self.format()!r})"


def multiply(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    a._check(b)
    W = a.algebra.groupoid
    zero = a.ring.zero
    acc: dict[Morphism, Any] = {}
    for u, cu in a.terms.items():
        lu = W.bfs_depth(u)
        for v, cv in b.terms.items():
            uv = W.compose(u, v)
            if uv is None or W.bfs_depth(uv) != lu + W.bfs_depth(v):
                continue
            acc[uv] = acc.get(uv, zero) + cu * cv
    return NilHeckeElement(a.algebra, acc)


# -- the regular representation on the groupoid algebra -----------------------

def _apply_letter(W: WeylGroupoid, x: str, i: int, vec: Mapping[Morphism, Any]) -> dict[Morphism, Any]:
    """L_i^x: w -> sigma_i^x w when composable and the length goes up, else 0."""
    out: dict[Morphism, Any] = {}
    s = W.generator(x, i)
    for w, c in vec.items():
        sw = W.compose(s, w)
        if sw is not None and W.length(sw) > W.length(w):
            out[sw] = out.get(sw, 0) + c
    return out


def lambda_action(n: NilHeckeElement, vec: Morphism | Mapping[Morphism, Any]) -> dict[Morphism, Any]:
    """Apply the operator of ``n`` to a formal sum of morphisms.

    Each T_u acts as E^x (identity u) or as L_{i_1}^{x_1} ... L_{i_m}^{x_m}
    along a reduced word of u.
    """
    W = n.algebra.groupoid
    if isinstance(vec, Morphism):
        vec = {vec: n.ring.one}
    total: dict[Morphism, Any] = {}
    for u, cu in n.terms.items():
        word = W.first_reduced_word(u)
        path = word.path(W.graph)
        cur = {w: c for w, c in vec.items() if w.target == path[-1]}
        for i, x in reversed(list(zip(word.letters, path))):
            cur = _apply_letter(W, x, i, cur)
        for w, c in cur.items():
            total[w] = total.get(w, 0) + cu * c
    return {w: c for w, c in total.items() if c}


def phi(n: NilHeckeElement) -> dict[Morphism, Any]:
    """Lambda(n) applied to the sum of all identities."""
    W = n.algebra.groupoid
    one = {W.identity(x): n.ring.one for x in W.graph.objects}
    return lambda_action(n, one)


# -- coverings ----------------------------------------------------------------

def covering_embed(c: Covering, n: NilHeckeElement, into: NilHeckeAlgebra) -> NilHeckeElement:
    """Image of ``n`` under the algebra map induced by the covering ``c``.

    ``n`` lives over ``c.target_graph``; ``into`` is the algebra over
    ``c.source_graph``.  Generators go to fiber sums and T_w to the product of
    the images of the letters of a reduced word.
    """
    problems = verify_covering(c)
    if problems:
        raise InvalidCovering(str(problems[0]))
    W = n.algebra.groupoid
    if W.graph != c.target_graph or into.groupoid.graph != c.source_graph:
        raise GroupoidMismatch("algebras do not match the covering")
    if into.ring != n.ring:
        raise RingMismatch(f"{n.ring.name} vs {into.ring.name}")

    def e_bar(x):
        out = into.zero()
        for y in c.fiber(x):
            out = out + into.idempotent(y)
        return out

    def n_bar(x, i):
        out = into.zero()
        for y in c.fiber(x):
            out = out + into.generator(y, i)
        return out

    total = into.zero()
    for u, cu in n.terms.items():
        word = W.first_reduced_word(u)
        img = e_bar(word.start)
        for i, x in zip(word.letters, word.path(W.graph)):
            img = img * n_bar(x, i)
        total = total + cu * img
    return total


def defining_relation_violations(A: NilHeckeAlgebra) -> list[Violation]:
    """Check the defining relations of the algebra on its generators."""
    W = A.groupoid
    g = W.graph
    out = []
    total = A.zero()
    for x in g.objects:
        total = total + A.idempotent(x)
        for y in g.objects:
            expect = A.idempotent(x) if x == y else A.zero()
            if A.idempotent(x) * A.idempotent(y) != expect:
                out.append(Violation("idempotents", f"e^{x} e^{y} != delta e^{x}"))
    if total != A.unit() or any(total * b != b or b * total != b for b in A.basis_elements()):
        out.append(Violation("unit", "sum of idempotents is not the unit"))
    for x in g.objects:
        for i in g.generators:
            n = A.generator(x, i)
            y = g.rho(i, x)
            if n * A.idempotent(y) != n or A.idempotent(x) * n != n:
                out.append(Violation("generator-support", f"n_{i}^{x} e^{y} = e^{x} n_{i}^{x} = n_{i}^{x} fails"))
            if A.generator(y, i) * n:
                out.append(Violation("nil", f"n_{i}^{y} n_{i}^{x} != 0"))
        for i, j in combinations(g.generators, 2):
            m = W.m(x, i, j)
            lhs = A.word_product(Word(x, tuple(i if k % 2 == 0 else j for k in range(m))))
            rhs = A.word_product(Word(x, tuple(j if k % 2 == 0 else i for k in range(m))))
            if lhs != rhs:
                out.append(Violation("braid", f"braid relation of length {m} for ({i},{j}) at {x} fails"))
    return out
