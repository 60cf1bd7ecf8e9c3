"""
Good subsequences, Theta sets, and the Bruhat order on a hom-set.

A subsequence of a reduced word is *good* when every dropped position is a
loop letter of the object path.  Dropping loops never changes the object path,
so the kept letters read from the same start end at the same object.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cartan import Violation
from .errors import DifferentHomSet, EmptyHomSet, NotReduced, ValidationError
from .groupoid import Morphism, WeylGroupoid, Word, format_word
from .psi import psi_expand

__all__ = [
    "GoodSubsequence", "BruhatPoset", "good_subsequences", "theta_set", "theta_witnesses",
    "bruhat_leq", "bruhat_poset", "verify_bruhat_independence", "export_dot",
]


@dataclass(frozen=True)
class GoodSubsequence:
    word: Word
    kept: tuple[int, ...]  # 1-based positions, increasing

    def subword(self) -> Word:
        return Word(self.word.start, tuple(self.word.letters[p - 1] for p in self.kept))


def _require_reduced(W: WeylGroupoid, w: Word):
    if not W.is_reduced(w):
        raise NotReduced(f"word {w} is not reduced")


def good_subsequences(W: WeylGroupoid, w: Word) -> list[GoodSubsequence]:
    """All good subsequences of ``w``, kept positions in lexicographic order."""
    _require_reduced(W, w)
    path = w.path(W.graph)
    loops = [p for p in range(1, len(w) + 1) if path[p] == path[p - 1]]
    forced = [p for p in range(1, len(w) + 1) if path[p] != path[p - 1]]
    out = []
    for k in range(len(loops) + 1):
        for dropped in combinations(loops, k):
            kept = tuple(sorted(set(forced) | (set(loops) - set(dropped))))
            out.append(GoodSubsequence(w, kept))
    return sorted(out, key=lambda g: g.kept)


def theta_witnesses(W: WeylGroupoid, w: Word) -> dict[Morphism, list[GoodSubsequence]]:
    """Morphisms reached by reduced good subwords, with their witnesses."""
    out: dict[Morphism, list[GoodSubsequence]] = {}
    for g in good_subsequences(W, w):
        sub = g.subword()
        if W.is_reduced(sub):
            out.setdefault(W.evaluate(sub), []).append(g)
    return out


def theta_set(W: WeylGroupoid, w: Word) -> frozenset[Morphism]:
    return frozenset(theta_witnesses(W, w))


def bruhat_leq(W: WeylGroupoid, u: Morphism, w: Morphism) -> bool:
    """``u <= w``, decided from the lexicographically first reduced word of ``w``."""
    if (u.source, u.target) != (w.source, w.target):
        raise DifferentHomSet(f"Hom({u.source},{u.target}) vs Hom({w.source},{w.target})")
    if u == w:
        return True
    return W.length(u) < W.length(w) and u in theta_set(W, W.first_reduced_word(w))


@dataclass(frozen=True)
class BruhatPoset:
    source: str
    target: str
    elements: tuple[Morphism, ...]  # ordered by (length, first reduced word)
    labels: dict[Morphism, str]
    lengths: dict[Morphism, int]
    relation: frozenset[tuple[Morphism, Morphism]]  # (u, w) with u <= w, reflexive pairs included
    hasse: tuple[tuple[Morphism, Morphism], ...]    # covers (lower, higher)

    def less(self, u: Morphism, w: Morphism) -> bool:
        return u != w and (u, w) in self.relation

    def violations(self) -> list[Violation]:
        out = []
        rel = self.relation
        for u in self.elements:
            if (u, u) not in rel:
                out.append(Violation("reflexive", f"{self.labels[u]} is not <= itself"))
        for u, w in rel:
            if u != w:
                if (w, u) in rel:
                    out.append(Violation("antisymmetric", f"{self.labels[u]} and {self.labels[w]}"))
                if self.lengths[u] >= self.lengths[w]:
                    out.append(Violation("length", f"{self.labels[u]} < {self.labels[w]} without length increase"))
        for u, v in rel:
            for v2, w in rel:
                if v == v2 and (u, w) not in rel:
                    out.append(Violation("transitive",
                                         f"{self.labels[u]} <= {self.labels[v]} <= {self.labels[w]}"))
        return out


def bruhat_poset(W: WeylGroupoid, y: str, x: str) -> BruhatPoset:
    """The Bruhat order on Hom(y, x), with Hasse covers; raises if not a partial order."""
    elems = W.hom(y, x)
    if not elems:
        raise EmptyHomSet(f"no morphism from {y} to {x}")
    elems.sort(key=lambda m: (W.length(m), W.first_reduced_word(m).letters))
    labels = {m: format_word(W.first_reduced_word(m).letters) for m in elems}
    lengths = {m: W.length(m) for m in elems}
    relation = set()
    for w in elems:
        theta = theta_set(W, W.first_reduced_word(w))
        for u in elems:
            if u == w or u in theta:
                relation.add((u, w))
    strict = {(u, w) for u, w in relation if u != w}
    hasse = tuple(
        (u, w) for w in elems for u in elems
        if (u, w) in strict and not any((u, v) in strict and (v, w) in strict for v in elems)
    )
    poset = BruhatPoset(y, x, tuple(elems), labels, lengths, frozenset(relation), hasse)
    problems = poset.violations()
    if problems:
        raise ValidationError(*problems[0])
    return poset


def verify_bruhat_independence(W: WeylGroupoid, w: Morphism) -> bool:
    """Theta agrees over all reduced words of ``w`` and equals each Psi-support."""
    thetas = set()
    for word in W.reduced_words(w):
        theta = theta_set(W, word)
        if theta != psi_expand(W, word).support():
            return False
        thetas.add(theta)
    return len(thetas) == 1


def export_dot(p: BruhatPoset) -> str:
    """Hasse diagram as a DOT digraph, edges from lower to higher element."""
    nodes = sorted(f'  "{p.labels[m]}";' for m in p.elements)
    edges = sorted(f'  "{p.labels[u]}" -> "{p.labels[w]}";' for u, w in p.hasse)
    return "\n".join(["digraph bruhat {", *nodes, *edges, "}"]) + "\n"
