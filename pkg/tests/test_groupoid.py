from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from weylgroupoid import BUILTIN_NAMES, Word, groupoid
from weylgroupoid.groupoid import format_word, parse_word


def test_empty_word_is_identity():
    W = groupoid("A2-std-3pt")
    m = W.evaluate(Word("x2"))
    assert m == W.identity("x2") and m.is_identity and W.length(m) == 0


def test_a2_longest_element_matrix():
    W = groupoid("A2-1pt")
    m = W.evaluate(Word("x", (1, 2, 1)))
    assert m.matrix == ((0, -1), (-1, 0))
    assert m == W.longest_element("x")


def test_object_path_in_standard_chain():
    W = groupoid("A2-std-3pt")
    w = Word("x1", (1, 2, 1))
    assert w.path(W.graph) == ("x1", "x1", "x2", "x3")
    m = W.evaluate(w)
    assert (m.source, m.target) == ("x3", "x1")


@pytest.mark.parametrize("name, size", [
    ("A1xA1-1pt", 4), ("A2-1pt", 6), ("B2-1pt", 8), ("G2-1pt", 12),
    ("A2-std-3pt", 18), ("B2-std-2pt", 16), ("row10", 36),
])
def test_enumeration_sizes(name, size):
    W = groupoid(name)
    assert len(W) == len(W.elements) == size
    assert len(oracles.groupoid_lengths(W.graph)) == size


def test_a2_standard_hom_sets():
    W = groupoid("A2-std-3pt")
    for x in W.graph.objects:
        assert len(W.with_target(x)) == 6
        assert sum(len(W.hom(y, x)) for y in W.graph.objects) == 6


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_lengths_match_bfs_oracle(name):
    W = groupoid(name)
    depth = oracles.groupoid_lengths(W.graph)
    for m in W.elements:
        assert W.length(m) == W.bfs_depth(m) == depth[(m.target, m.source, m.matrix)]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_generators_have_length_one(name):
    W = groupoid(name)
    for x in W.graph.objects:
        for i in W.graph.generators:
            assert W.length(W.generator(x, i)) == 1


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_exchange_changes_length_by_one(name):
    W = groupoid(name)
    for m in W.elements:
        for i in W.graph.generators:
            assert abs(W.length(W.left_multiply(i, m)) - W.length(m)) == 1


@pytest.mark.parametrize("name, x, length", [
    ("A2-1pt", "x", 3), ("B2-std-2pt", "x1", 4), ("row10", "x1", 6), ("row10", "x2", 6), ("row10", "x3", 6),
])
def test_longest_element(name, x, length):
    W = groupoid(name)
    w0 = W.longest_element(x)
    assert W.length(w0) == length == len(W.rs.positive(w0.source))


def test_reduced_words_identity():
    W = groupoid("row10")
    assert W.reduced_words(W.identity("x2")) == (Word("x2", ()),)


def test_reduced_words_a2_longest():
    W = groupoid("A2-1pt")
    assert [w.letters for w in W.reduced_words(W.longest_element("x"))] == [(1, 2, 1), (2, 1, 2)]


def test_reduced_words_b2_standard_longest():
    W = groupoid("B2-std-2pt")
    words = W.reduced_words(W.longest_element("x1"))
    assert [w.letters for w in words] == [(1, 2, 1, 2), (2, 1, 2, 1)]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_reduced_words_match_brute_force(name):
    W = groupoid(name)
    found = {m: [] for m in W.elements}
    top = max(W.length(m) for m in W.elements)
    for x in W.graph.objects:
        for r in range(top + 1):
            for letters in product(W.graph.generators, repeat=r):
                w = Word(x, letters)
                m = W.evaluate(w)
                if W.length(m) == r:
                    found[m].append(w)
    for m in W.elements:
        assert list(W.reduced_words(m)) == sorted(found[m])


def test_braid_equivalence_examples():
    W = groupoid("A2-1pt")
    assert W.braid_equivalent(Word("x", (1, 2, 1)), Word("x", (2, 1, 2)))
    assert not W.braid_equivalent(Word("x", (1, 2)), Word("x", (2, 1)))
    R = groupoid("row10")
    a, b = R.reduced_words(R.longest_element("x2"))
    assert R.braid_equivalent(a, b)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_matsumoto_property(name):
    W = groupoid(name)
    for m in W.elements:
        words = W.reduced_words(m)
        assert all(W.braid_equivalent(words[0], w) for w in words)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BUILTIN_NAMES), st.data())
def test_braid_moves_preserve_evaluation(name, data):
    W = groupoid(name)
    x = data.draw(st.sampled_from(W.graph.objects))
    letters = tuple(data.draw(st.lists(st.sampled_from(list(W.graph.generators)), max_size=10)))
    w = Word(x, letters)
    for v in W.braid_moves(w):
        assert W.evaluate(v) == W.evaluate(w)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BUILTIN_NAMES), st.data())
def test_composition_matches_concatenation(name, data):
    W = groupoid(name)
    gens = list(W.graph.generators)
    x = data.draw(st.sampled_from(W.graph.objects))
    a = tuple(data.draw(st.lists(st.sampled_from(gens), max_size=6)))
    b = tuple(data.draw(st.lists(st.sampled_from(gens), max_size=6)))
    u = W.evaluate(Word(x, a))
    v = W.evaluate(Word(u.source, b))
    assert W.compose(u, v) == W.evaluate(Word(x, a + b))


def test_compose_requires_matching_objects():
    W = groupoid("A2-std-3pt")
    assert W.compose(W.identity("x1"), W.identity("x2")) is None


@pytest.mark.parametrize("text, letters", [("1,2,1", (1, 2, 1)), ("", ()), ("id", ()), (" 2 ", (2,))])
def test_parse_word(text, letters):
    assert parse_word(text) == letters


def test_parse_word_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("1,a")


def test_format_word():
    assert format_word(()) == "id" and format_word((2, 1)) == "2,1"
    assert str(Word("x1", (1, 2))) == "x1:1,2"
