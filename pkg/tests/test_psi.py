import json
from math import prod

import pytest

from weylgroupoid import (
    BUILTIN_NAMES, NotReduced, Polynomial, RankNotTwo, RootNotPresent, Word, act, beta_sequence,
    groupoid, h, linear_form, p_plus, p_plus_excl, parse_cartan_graph, psi_apply, psi_expand,
    verify_rank2_identity,
)
from weylgroupoid.psi import poly_algebra, subword_expansion
from weylgroupoid.roots import mat_vec

t1, t2 = Polynomial.variables(2)


def test_h_at_a_loop():
    W = groupoid("A2-1pt")
    A = poly_algebra(W)
    assert h(W, "x", 1, t1) == A.idempotent("x") + t1 * A.generator("x", 1)


def test_h_off_a_loop():
    W = groupoid("A2-std-3pt")
    A = poly_algebra(W)
    t = t1 + t2
    assert h(W, "x2", 1, t) == t * A.generator("x2", 1)


def test_h_at_zero():
    W = groupoid("A2-std-3pt")
    A = poly_algebra(W)
    zero = Polynomial.zero(2)
    assert h(W, "x1", 1, zero) == A.idempotent("x1")
    assert not h(W, "x2", 1, zero)


@pytest.mark.parametrize("name, start, word, betas", [
    ("A2-1pt", "x", (1, 2, 1), [(1, 0), (1, 1), (0, 1)]),
    ("row10", "x1", (1, 2, 1, 2, 1, 2), [(1, 0), (2, 1), (1, 1), (2, 3), (1, 2), (0, 1)]),
    ("B2-std-2pt", "x1", (1, 2, 1, 2), [(1, 0), (2, 1), (1, 1), (0, 1)]),
])
def test_beta_sequence(name, start, word, betas):
    assert beta_sequence(groupoid(name), Word(start, word)) == betas


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_betas_are_the_inversion_set(name):
    W = groupoid(name)
    for m in W.elements:
        images = [mat_vec(m.matrix, g) for g in W.rs.positive(m.source)]
        inversions = {tuple(-c for c in v) for v in images if all(c <= 0 for c in v)}
        for w in W.reduced_words(m):
            betas = beta_sequence(W, w)
            assert len(set(betas)) == len(betas)
            assert set(betas) == inversions


def test_beta_sequence_rejects_non_reduced():
    with pytest.raises(NotReduced):
        beta_sequence(groupoid("A2-1pt"), Word("x", (1, 1)))
    with pytest.raises(NotReduced):
        psi_expand(groupoid("A2-std-3pt"), Word("x2", (1, 1)))


def test_a2_full_expansion():
    W = groupoid("A2-1pt")
    got = psi_expand(W, Word("x", (1, 2, 1)))
    want = {
        (): 1, (1,): t1 + t2, (2,): t1 + t2, (1, 2): t1 * (t1 + t2),
        (2, 1): (t1 + t2) * t2, (1, 2, 1): t1 * (t1 + t2) * t2,
    }
    assert got.terms == {W.evaluate(Word("x", k)): v for k, v in want.items()}


def test_a2_standard_two_terms_at_x1():
    W = groupoid("A2-std-3pt")
    got = psi_expand(W, Word("x1", (1, 2, 1)))
    assert got.terms == {
        W.evaluate(Word("x1", (2, 1))): (t1 + t2) * t2,
        W.evaluate(Word("x1", (1, 2, 1))): t1 * (t1 + t2) * t2,
    }


def test_empty_word_gives_idempotent():
    W = groupoid("row10")
    assert psi_expand(W, Word("x3")) == poly_algebra(W).idempotent("x3")


def test_p_plus():
    W = groupoid("A2-1pt")
    assert p_plus(W, "x") == t1 * (t1 + t2) * t2
    assert p_plus_excl(W, "x", (1, 0)) == (t1 + t2) * t2
    R = groupoid("row10")
    assert p_plus(R, "x1") == t1 * (2 * t1 + t2) * (t1 + t2) * (2 * t1 + 3 * t2) * (t1 + 2 * t2) * t2


def test_p_plus_errors():
    with pytest.raises(RootNotPresent):
        p_plus_excl(groupoid("A2-1pt"), "x", (2, 1))
    with pytest.raises(RankNotTwo):
        p_plus(_a3(), "x")
    with pytest.raises(RankNotTwo):
        verify_rank2_identity(_a3(), "x")


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_rank2_identity_everywhere(name):
    W = groupoid(name)
    assert all(verify_rank2_identity(W, x) for x in W.graph.objects)


def test_g2_top_coefficient():
    W = groupoid("G2-1pt")
    w0 = W.longest_element("x")
    top = t1 * (3 * t1 + t2) * (2 * t1 + t2) * (3 * t1 + 2 * t2) * (t1 + t2) * t2
    assert psi_expand(W, Word("x", (1, 2, 1, 2, 1, 2))).coefficient(w0) == top


def test_b2_standard_two_terms():
    W = groupoid("B2-std-2pt")
    got = psi_expand(W, Word("x1", (1, 2, 1, 2)))
    assert sorted(got.terms.values(), key=lambda p: p.degree()) == [
        (2 * t1 + t2) * (t1 + t2) * t2, t1 * (2 * t1 + t2) * (t1 + t2) * t2]


def test_row10_x2_single_term():
    W = groupoid("row10")
    got = psi_expand(W, Word("x2", (1, 2, 1, 2, 1, 2)))
    assert list(got.terms.values()) == [p_plus(W, "x2")]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_braid_invariance_and_nonnegativity(name):
    W = groupoid(name)
    for m in W.elements:
        exps = [psi_expand(W, w) for w in W.reduced_words(m)]
        assert all(e == exps[0] for e in exps)
        assert all(c.is_nonnegative() for _, c in exps[0])


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_top_term_is_product_of_betas(name):
    W = groupoid(name)
    for m in W.elements:
        for w in W.reduced_words(m):
            top = prod((linear_form(b) for b in beta_sequence(W, w)), start=Polynomial.one(2))
            assert psi_expand(W, w).coefficient(m) == top


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_subword_semantics(name):
    W = groupoid(name)
    for m in W.elements:
        w = W.first_reduced_word(m)
        assert psi_expand(W, w).terms == subword_expansion(W, w)


def test_psi_apply_with_coefficients():
    W = groupoid("A2-1pt")
    A = poly_algebra(W)
    w = Word("x", (1,))
    s = W.evaluate(w).matrix
    v = t2 * A.generator("x", 2)
    assert psi_apply(W, w, v) == psi_expand(W, w) * (act(s, t2) * A.generator("x", 2))


# -- rank three ---------------------------------------------------------------

def _a3():
    doc = {"rank": 3, "objects": ["x"], "edges": [],
           "cartan": {"x": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]}}
    return groupoid(parse_cartan_graph(json.dumps(doc)))


def test_rank_three_invariance():
    W = _a3()
    assert len(W) == 24
    for m in W.elements:
        exps = [psi_expand(W, w) for w in W.reduced_words(m)]
        assert all(e == exps[0] for e in exps)
        assert all(c.is_nonnegative() for _, c in exps[0])
    w0 = W.longest_element("x")
    assert len(W.reduced_words(w0)) == 16
    assert len(psi_expand(W, W.first_reduced_word(w0))) == 24
