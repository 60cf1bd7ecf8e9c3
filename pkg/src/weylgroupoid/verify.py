"""
Invariant suites run by ``weylgroupoid verify``.

Each suite takes a :class:`WeylGroupoid` and returns :class:`CheckResult`
rows; :func:`run_all` concatenates them in module order.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Callable, NamedTuple

from .bruhat import bruhat_poset, theta_set, theta_witnesses
from .cartan import parse_cartan_graph, serialize_cartan_graph
from .groupoid import Morphism, WeylGroupoid, Word
from .nilhecke import NilHeckeAlgebra, defining_relation_violations, lambda_action, phi
from .polynomial import Polynomial, act, linear_form
from .psi import beta_sequence, psi_expand, subword_expansion, verify_rank2_identity
from .roots import (check_grs_axioms, identity_matrix, is_negative, is_positive, m_entry,
                    mat_mul, mat_vec)

__all__ = ["CheckResult", "run_all", "SUITES"]


class CheckResult(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}/{self.name}{tail}"


def _first_failure(items) -> str:
    for item in items:
        return str(item)
    return ""


# -- cartan-graph ---------------------------------------------------------------

def cartan_suite(W: WeylGroupoid) -> list[CheckResult]:
    g = W.graph
    back = parse_cartan_graph(serialize_cartan_graph(g))
    quiver_bad = []
    for x, i, y in g.datum.arrows():
        loop = W.compose(W.generator(x, i), W.generator(y, i))
        if loop is None or loop.source != x or loop.target != x or not loop.is_identity:
            quiver_bad.append(f"sigma_{i}^{x} sigma_{i}^{y}")
    compat_bad = [
        f"c^{x}_{i}{j}" for x in g.objects for i in g.generators for j in g.generators
        if g.cartan_entry(x, i, j) != g.cartan_entry(g.rho(i, x), i, j)
    ]
    return [
        CheckResult("cartan", "round-trip", back == g),
        CheckResult("cartan", "quiver-loops", not quiver_bad, _first_failure(quiver_bad)),
        CheckResult("cartan", "compatibility", not compat_bad, _first_failure(compat_bad)),
    ]


# -- root-system ----------------------------------------------------------------

def roots_suite(W: WeylGroupoid) -> list[CheckResult]:
    rs, g = W.rs, W.graph
    n = g.rank
    axioms = check_grs_axioms(rs)
    inv_bad, transport_bad, m_bad = [], [], []
    for x in g.objects:
        for i in g.generators:
            y = g.rho(i, x)
            if mat_mul(rs.reflection(x, i), rs.reflection(y, i)) != identity_matrix(n):
                inv_bad.append(f"s_{i}^{x}")
            if {mat_vec(rs.reflection(x, i), r) for r in rs.roots[x]} != rs.roots[y]:
                transport_bad.append(f"s_{i}^{x}")
        for i, j in combinations(g.generators, 2):
            mij, mji = m_entry(rs, x, i, j), m_entry(rs, x, j, i)
            z = x
            for _ in range(mij):
                z = g.rho(i, g.rho(j, z))
            if mij != mji or z != x:
                m_bad.append(f"m_{i}{j}^{x}")
    sign_bad = [r for x in g.objects for r in rs.roots[x] if not (is_positive(r) or is_negative(r))]
    return [
        CheckResult("roots", "grs-axioms", not axioms, _first_failure(axioms)),
        CheckResult("roots", "reflection-involution", not inv_bad, _first_failure(inv_bad)),
        CheckResult("roots", "root-transport", not transport_bad, _first_failure(transport_bad)),
        CheckResult("roots", "sign-dichotomy", not sign_bad, _first_failure(sign_bad)),
        CheckResult("roots", "m-symmetry", not m_bad, _first_failure(m_bad)),
    ]


# -- weyl-groupoid --------------------------------------------------------------

def reduce_word(W: WeylGroupoid, w: Word) -> Word:
    """Shorten ``w`` by braid moves and deletions of adjacent equal letters.

    Returns a word of the braid class of the result that admits no deletion.
    """
    while True:
        for v in sorted(W.braid_class(w)):
            k = next((p for p in range(len(v) - 1) if v.letters[p] == v.letters[p + 1]), None)
            if k is not None:
                w = Word(v.start, v.letters[:k] + v.letters[k + 2:])
                break
        else:
            return w


def faithfulness_failures(W: WeylGroupoid, max_len: int) -> list[str]:
    """Words up to ``max_len``: every move preserves the evaluation, and every
    word shrinks by moves to a reduced word of its evaluation."""
    g = W.graph
    bad = []
    for x in g.objects:
        for r in range(max_len + 1):
            for letters in product(g.generators, repeat=r):
                w = Word(x, letters)
                m = W.evaluate(w)
                for v in W.braid_moves(w):
                    if W.evaluate(v) != m:
                        bad.append(f"braid move changes {w}")
                for p in range(r - 1):
                    if letters[p] == letters[p + 1]:
                        v = Word(x, letters[:p] + letters[p + 2:])
                        if W.evaluate(v) != m:
                            bad.append(f"deletion changes {w}")
                red = reduce_word(W, w)
                if W.evaluate(red) != m or not W.is_reduced(red):
                    bad.append(f"{w} does not reduce")
    return bad


def groupoid_suite(W: WeylGroupoid, max_word_len: int | None = None) -> list[CheckResult]:
    g = W.graph
    length_bad = [m for m in W.elements if W.length(m) != W.bfs_depth(m)]
    exchange_bad = []
    for m in W.elements:
        for i in g.generators:
            d = W.length(W.left_multiply(i, m)) - W.length(m)
            if d not in (1, -1):
                exchange_bad.append(f"{W.first_reduced_word(m)} by {i}")
    matsumoto_bad = []
    for m in W.elements:
        words = W.reduced_words(m)
        if set(words) != set(W.braid_class(words[0])):
            matsumoto_bad.append(str(words[0]))
    if max_word_len is None:
        longest = max(W.bfs_depth(m) for m in W.elements)
        max_word_len = min(longest + 2, 8)
    faith_bad = faithfulness_failures(W, max_word_len)
    return [
        CheckResult("groupoid", "length-consistency", not length_bad, _first_failure(length_bad)),
        CheckResult("groupoid", "exchange", not exchange_bad, _first_failure(exchange_bad)),
        CheckResult("groupoid", "faithfulness", not faith_bad,
                    _first_failure(faith_bad) or f"words up to length {max_word_len}"),
        CheckResult("groupoid", "matsumoto", not matsumoto_bad, _first_failure(matsumoto_bad)),
    ]


# -- nil-hecke ------------------------------------------------------------------

def word_product_failures(A: NilHeckeAlgebra) -> list[str]:
    W = A.groupoid
    bad = []
    for m in W.elements:
        for w in W.reduced_words(m):
            if A.word_product(w) != A.basis(m):
                bad.append(f"product along {w}")
    if len(A.basis_elements()) != len(W.elements):
        bad.append("basis size differs from morphism count")
    return bad


def _partial_maps(A: NilHeckeAlgebra) -> dict[Morphism, dict[Morphism, Morphism]]:
    """Lambda(T_u) as a partial map on morphisms (basis elements act by 0 or a basis vector)."""
    W = A.groupoid
    out = {}
    for u in W.elements:
        T = A.basis(u)
        table = {}
        for w in W.elements:
            img = lambda_action(T, w)
            if img:
                (v, c), = img.items()
                if c != 1:
                    raise AssertionError("basis element acted with coefficient != 1")
                table[w] = v
        out[u] = table
    return out


def lambda_failures(A: NilHeckeAlgebra) -> list[str]:
    W = A.groupoid
    maps = _partial_maps(A)
    bad = []
    for u in W.elements:
        for v in W.elements:
            prod = A.basis(u) * A.basis(v)
            if prod:
                (uv, _), = prod.terms.items()
                lhs = maps[uv]
            else:
                lhs = {}
            rhs = {w: maps[u][maps[v][w]] for w in maps[v] if maps[v][w] in maps[u]}
            if lhs != rhs:
                bad.append(f"T[{W.first_reduced_word(u)}] T[{W.first_reduced_word(v)}]")
    return bad


def phi_failures(A: NilHeckeAlgebra) -> list[str]:
    W = A.groupoid
    bad = []
    images = set()
    for m in W.elements:
        img = phi(A.basis(m))
        if img != {m: 1}:
            bad.append(f"Phi(T[{W.first_reduced_word(m)}])")
        images.update(img)
    if images != set(W.elements):
        bad.append("Phi is not onto")
    return bad


def _random_element(A: NilHeckeAlgebra, rng: random.Random, size: int = 4):
    elems = A.groupoid.elements
    return A.element({m: rng.randint(-5, 5) for m in rng.sample(elems, min(size, len(elems)))})


def nilhecke_suite(W: WeylGroupoid, seed: int = 0, trials: int = 50) -> list[CheckResult]:
    A = NilHeckeAlgebra(W)
    rng = random.Random(seed)
    assoc_bad = []
    for _ in range(trials):
        a, b, c = (_random_element(A, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            assoc_bad.append("random triple")
    basis_bad = word_product_failures(A)
    lam_bad = lambda_failures(A)
    phi_bad = phi_failures(A)
    rel_bad = defining_relation_violations(A)
    return [
        CheckResult("nilhecke", "word-products", not basis_bad, _first_failure(basis_bad)),
        CheckResult("nilhecke", "lambda-algebra-map", not lam_bad, _first_failure(lam_bad)),
        CheckResult("nilhecke", "lambda-faithful", not phi_bad, _first_failure(phi_bad)),
        CheckResult("nilhecke", "defining-relations", not rel_bad, _first_failure(rel_bad)),
        CheckResult("nilhecke", "associativity", not assoc_bad, _first_failure(assoc_bad)),
    ]


# -- poly-rep -------------------------------------------------------------------

def _random_poly(nvars: int, rng: random.Random) -> Polynomial:
    return Polynomial(nvars, {tuple(rng.randint(0, 3) for _ in range(nvars)): rng.randint(-4, 4)
                              for _ in range(rng.randint(1, 4))})


def psi_suite(W: WeylGroupoid, seed: int = 0, trials: int = 30) -> list[CheckResult]:
    g = W.graph
    invariance_bad, sign_bad, top_bad, subword_bad = [], [], [], []
    for m in W.elements:
        words = W.reduced_words(m)
        expansions = [psi_expand(W, w) for w in words]
        if any(e != expansions[0] for e in expansions[1:]):
            invariance_bad.append(str(words[0]))
        for w, e in zip(words, expansions):
            if not all(c.is_nonnegative() for _, c in e):
                sign_bad.append(str(w))
            top = Polynomial.one(g.rank)
            for b in beta_sequence(W, w):
                top = top * linear_form(b)
            if e.coefficient(m) != top:
                top_bad.append(str(w))
            path = w.path(g)
            if all(path[p] != path[p + 1] for p in range(len(w))) and len(e) != 1:
                top_bad.append(f"{w} has no loops but several terms")
            if e.terms != subword_expansion(W, w):
                subword_bad.append(str(w))
    rng = random.Random(seed)
    act_bad = []
    refl = [W.rs.reflection(x, i) for x in g.objects for i in g.generators]
    for _ in range(trials):
        p, q = _random_poly(g.rank, rng), _random_poly(g.rank, rng)
        s1, s2 = rng.choice(refl), rng.choice(refl)
        s = mat_mul(s1, s2)
        if act(s, p) != act(s1, act(s2, p)):
            act_bad.append("composition")
        if act(s, p * q) != act(s, p) * act(s, q) or act(s, p + q) != act(s, p) + act(s, q):
            act_bad.append("ring map")
        if act(identity_matrix(g.rank), p) != p:
            act_bad.append("identity")
    out = [
        CheckResult("psi", "braid-invariance", not invariance_bad, _first_failure(invariance_bad)),
        CheckResult("psi", "nonnegativity", not sign_bad, _first_failure(sign_bad)),
        CheckResult("psi", "top-term", not top_bad, _first_failure(top_bad)),
        CheckResult("psi", "subword-semantics", not subword_bad, _first_failure(subword_bad)),
        CheckResult("psi", "act-homomorphism", not act_bad, _first_failure(act_bad)),
    ]
    if g.rank == 2:
        bad = [x for x in g.objects if not verify_rank2_identity(W, x)]
        out.append(CheckResult("psi", "rank2-identity", not bad, _first_failure(bad)))
    return out


# -- bruhat ---------------------------------------------------------------------

def classical_bruhat_pairs(W: WeylGroupoid, y: str, x: str) -> set[tuple[Morphism, Morphism]]:
    """Unrestricted subwords over all reduced words (the one-object definition)."""
    pairs = set()
    for w in W.hom(y, x):
        for word in W.reduced_words(w):
            r = len(word)
            for k in range(r + 1):
                for kept in combinations(range(r), k):
                    sub = Word(word.start, tuple(word.letters[p] for p in kept))
                    u = W.evaluate(sub)
                    if u.source == y and W.is_reduced(sub):
                        pairs.add((u, w))
    return pairs


def bruhat_suite(W: WeylGroupoid) -> list[CheckResult]:
    g = W.graph
    support_bad, indep_bad, witness_bad, order_bad = [], [], [], []
    for m in W.elements:
        thetas = set()
        for w in W.reduced_words(m):
            th = theta_set(W, w)
            thetas.add(th)
            if th != psi_expand(W, w).support():
                support_bad.append(str(w))
            path = w.path(g)
            for u, gs in theta_witnesses(W, w).items():
                for gsub in gs:
                    dropped = set(range(1, len(w) + 1)) - set(gsub.kept)
                    if any(path[z] != path[z - 1] for z in dropped):
                        witness_bad.append(str(w))
        if len(thetas) != 1:
            indep_bad.append(str(W.first_reduced_word(m)))
    posets = {}
    for y in g.objects:
        for x in g.objects:
            if W.hom(y, x):
                try:
                    posets[y, x] = bruhat_poset(W, y, x)
                except Exception as exc:  # noqa: BLE001 - reported as a failed check
                    order_bad.append(f"Hom({y},{x}): {exc}")
    out = [
        CheckResult("bruhat", "psi-support", not support_bad, _first_failure(support_bad)),
        CheckResult("bruhat", "independence", not indep_bad, _first_failure(indep_bad)),
        CheckResult("bruhat", "order-axioms", not order_bad, _first_failure(order_bad)),
        CheckResult("bruhat", "loop-only-witnesses", not witness_bad, _first_failure(witness_bad)),
    ]
    if len(g.objects) == 1:
        (x,) = g.objects
        classical = classical_bruhat_pairs(W, x, x)
        ok = (x, x) in posets and set(posets[x, x].relation) == classical
        out.append(CheckResult("bruhat", "one-point-specialization", ok))
    return out


SUITES: dict[str, Callable[[WeylGroupoid], list[CheckResult]]] = {
    "cartan": cartan_suite,
    "roots": roots_suite,
    "groupoid": groupoid_suite,
    "nilhecke": nilhecke_suite,
    "psi": psi_suite,
    "bruhat": bruhat_suite,
}


def run_all(W: WeylGroupoid) -> list[CheckResult]:
    out = []
    for suite in SUITES.values():
        out.extend(suite(W))
    return out
