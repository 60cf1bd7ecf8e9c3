import pytest
from hypothesis import given, settings, strategies as st

from weylgroupoid import (
    BUILTIN_NAMES, INTEGERS, Covering, GroupoidMismatch, InvalidCovering, NilHeckeAlgebra,
    RingMismatch, Word, builtin, covering_embed, disjoint_copies, groupoid, lambda_action, phi,
    polynomial_ring,
)
from weylgroupoid.nilhecke import defining_relation_violations


@pytest.fixture(scope="module")
def a2():
    return NilHeckeAlgebra(groupoid("A2-1pt"))


def test_idempotents(a2):
    A = NilHeckeAlgebra(groupoid("A2-std-3pt"))
    e1, e2 = A.idempotent("x1"), A.idempotent("x2")
    assert e1 * e1 == e1
    assert not e1 * e2
    assert A.idempotent("x1") + e2 + A.idempotent("x3") == A.unit()
    for b in A.basis_elements():
        assert A.unit() * b == b == b * A.unit()


def test_generator_relations():
    A = NilHeckeAlgebra(groupoid("A2-std-3pt"))
    n = A.generator("x2", 1)
    assert A.idempotent("x2") * n == n == n * A.idempotent("x3")
    assert not A.idempotent("x1") * n
    assert not A.generator("x3", 1) * n


def test_a2_braid_relation(a2):
    n1, n2 = a2.generator("x", 1), a2.generator("x", 2)
    w0 = a2.basis(a2.groupoid.longest_element("x"))
    assert n1 * n2 * n1 == n2 * n1 * n2 == w0
    assert not w0 * n1
    assert not n1 * n1


def test_non_loop_square_vanishes():
    A = NilHeckeAlgebra(groupoid("A2-std-3pt"))
    assert not A.generator("x2", 1) * A.generator("x3", 1)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_defining_relations(name):
    assert defining_relation_violations(NilHeckeAlgebra(groupoid(name))) == []


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_word_products_are_basis_elements(name):
    W = groupoid(name)
    A = NilHeckeAlgebra(W)
    for m in W.elements:
        for w in W.reduced_words(m):
            assert A.word_product(w) == A.basis(m)


def test_non_reduced_word_product_vanishes(a2):
    assert not a2.word_product(Word("x", (1, 2, 1, 2)))


def test_lambda_examples(a2):
    W = a2.groupoid
    e = W.identity("x")
    assert lambda_action(a2.idempotent("x"), e) == {e: 1}
    s1 = W.generator("x", 1)
    assert lambda_action(a2.generator("x", 1), e) == {s1: 1}
    assert lambda_action(a2.generator("x", 1), s1) == {}


def test_lambda_kills_length_drop_in_chain():
    W = groupoid("A2-std-3pt")
    A = NilHeckeAlgebra(W)
    s = W.generator("x3", 1)  # target x3, source x2
    assert lambda_action(A.generator("x2", 1), s) == {}


def test_phi(a2):
    W = a2.groupoid
    for m in W.elements:
        assert phi(a2.basis(m)) == {m: 1}
    assert phi(a2.idempotent("x")) == {W.identity("x"): 1}
    assert phi(a2.zero()) == {}


def _elements(A, max_terms=4):
    W = A.groupoid
    return st.dictionaries(st.sampled_from(W.elements), st.integers(-5, 5), max_size=max_terms).map(A.element)


@pytest.mark.parametrize("name", ["B2-1pt", "A2-std-3pt", "row10"])
def test_associativity(name):
    A = NilHeckeAlgebra(groupoid(name))

    @settings(max_examples=40, deadline=None)
    @given(_elements(A), _elements(A), _elements(A))
    def check(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    check()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_lambda_is_multiplicative_on_random_elements(data):
    A = NilHeckeAlgebra(groupoid("B2-std-2pt"))
    a, b = data.draw(_elements(A)), data.draw(_elements(A))
    for w in A.groupoid.elements:
        inner = lambda_action(b, w)
        assert lambda_action(a * b, w) == lambda_action(a, inner)


def test_zero_coefficients_dropped(a2):
    e = a2.groupoid.identity("x")
    assert a2.element({e: 0}).terms == {}
    assert len(a2.idempotent("x") - a2.idempotent("x")) == 0


def test_ring_mismatch(a2):
    P = NilHeckeAlgebra(a2.groupoid, polynomial_ring(2))
    with pytest.raises(RingMismatch):
        a2.idempotent("x") * P.idempotent("x")


def test_groupoid_mismatch(a2):
    other = NilHeckeAlgebra(groupoid("A2-1pt"), INTEGERS)
    with pytest.raises(GroupoidMismatch):
        a2.idempotent("x") + other.idempotent("x")


def test_format_lists_terms_by_length(a2):
    n = a2.generator("x", 2) + 3 * a2.idempotent("x")
    assert n.format() == "3 * T[x->x: id]\n1 * T[x->x: 2]"
    assert a2.zero().format() == "0"


# -- coverings ----------------------------------------------------------------

def _embed_setup(c):
    A = NilHeckeAlgebra(groupoid(c.target_graph))
    At = NilHeckeAlgebra(groupoid(c.source_graph))
    return A, At


def test_two_copy_covering_idempotent_image():
    c = disjoint_copies(builtin("A2-1pt"), 2)
    A, At = _embed_setup(c)
    img = covering_embed(c, A.idempotent("x"), At)
    assert img == At.idempotent("x#1") + At.idempotent("x#2")
    assert covering_embed(c, A.unit(), At) == At.unit()


def test_two_copy_covering_is_multiplicative_up_to_length_two():
    c = disjoint_copies(builtin("A2-1pt"), 2)
    A, At = _embed_setup(c)
    small = [m for m in A.groupoid.elements if A.groupoid.length(m) <= 2]
    for u in small:
        for v in small:
            lhs = covering_embed(c, A.basis(u) * A.basis(v), At)
            assert lhs == covering_embed(c, A.basis(u), At) * covering_embed(c, A.basis(v), At)


def test_identity_covering_is_identity_map():
    g = builtin("row10")
    c = Covering.identity(g)
    A = NilHeckeAlgebra(groupoid(g))
    At = NilHeckeAlgebra(groupoid(g))
    for m in A.groupoid.elements:
        assert covering_embed(c, A.basis(m), At).terms == {m: 1}


def test_fold_covering_is_injective_algebra_map():
    g3 = builtin("A2-std-3pt")
    c = Covering(g3, builtin("A2-1pt"), {x: "x" for x in g3.objects})
    A, At = _embed_setup(c)
    images = {m: covering_embed(c, A.basis(m), At) for m in A.groupoid.elements}
    for u in A.groupoid.elements:
        for v in A.groupoid.elements:
            assert covering_embed(c, A.basis(u) * A.basis(v), At) == images[u] * images[v]
    seen = set()
    for img in images.values():
        assert len(img) == 3 and seen.isdisjoint(img.support())
        seen |= img.support()


def test_invalid_covering_rejected():
    g = builtin("row10")
    c = Covering(g, builtin("A2-1pt"), {x: "x" for x in g.objects})
    A = NilHeckeAlgebra(groupoid("A2-1pt"))
    with pytest.raises(InvalidCovering):
        covering_embed(c, A.unit(), NilHeckeAlgebra(groupoid(g)))
