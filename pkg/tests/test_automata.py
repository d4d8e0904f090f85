from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_minimal_dfa_size, language_set
from succinct.automata import (
    Dfa, Nfa, Xfa, as_nfa, as_xfa, canonical, determinize_union, determinize_xor, equivalent,
    find_counterexample, is_minimal, isomorphic, minimize, state_classes, to_dfa, words,
)
from succinct.errors import InputError, ResourceLimitError


@st.composite
def dfas(draw, max_states=5, alphabet=("a", "b")):
    n = draw(st.integers(1, max_states))
    rows = [[draw(st.integers(0, n - 1)) for _ in alphabet] for _ in range(n)]
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Dfa(alphabet, n, draw(st.integers(0, n - 1)), finals, rows)


@st.composite
def branching(draw, cls, max_states=4, alphabet=("a", "b")):
    n = draw(st.integers(0, max_states))
    states = st.sets(st.integers(0, n - 1)) if n else st.just(set())
    rows = [[draw(states) for _ in alphabet] for _ in range(n)]
    return cls(alphabet, n, draw(states), draw(states), rows)


def example_dfa():
    # the running example, with an unreachable copy of x
    return Dfa("ab", 3, 0, {1}, [[1, 0], [1, 0], [1, 2]])


def test_example_dfa_runs():
    d = example_dfa()
    assert d.accepts("ba")
    assert not d.accepts("ab")
    assert not d.accepts("")
    assert d.run("ab") == 0


def test_unknown_symbol_rejected():
    with pytest.raises(InputError, match="not in the alphabet"):
        example_dfa().accepts("c")


def test_validation():
    with pytest.raises(InputError):
        Dfa("ab", 1, 0, {}, [[0]])
    with pytest.raises(InputError):
        Dfa("ab", 1, 1, {}, [[0, 0]])
    with pytest.raises(InputError, match="single characters"):
        Dfa(["ab"], 1, 0, {}, [[0]])
    with pytest.raises(InputError, match="repeated"):
        Nfa("aa", 1, {0}, {}, [[set(), set()]])
    with pytest.raises(InputError):
        Nfa("a", 1, {0}, {}, [[{3}]])


def test_minimize_example():
    m = minimize(example_dfa())
    assert m.minimal and m.state_count == 2
    assert m.delta == ((1, 0), (1, 0)) and m.finals == {1}
    assert is_minimal(m)
    assert not is_minimal(example_dfa())


def test_minimize_empty_language_keeps_one_state():
    m = minimize(Dfa("ab", 2, 0, set(), [[1, 0], [0, 1]]))
    assert m.state_count == 1 and not m.finals


def test_state_classes_ignores_reachability():
    d = example_dfa()
    assert state_classes(d) == [0, 1, 0]


def test_xor_semantics_differs_from_union():
    # two paths to the same final state cancel
    rows = [[{1, 2}], [{3}], [{3}], [set()]]
    x = Xfa("a", 4, {0}, {3}, rows)
    n = Nfa("a", 4, {0}, {3}, rows)
    assert not x.accepts("aa") and n.accepts("aa")
    assert x.with_initials({1}).accepts("a")
    assert not x.with_initials({1, 2}).accepts("a")


def test_counterexample_is_shortest():
    left = Dfa("ab", 1, 0, {0}, [[0, 0]])
    right = minimize(Dfa("ab", 3, 0, {0, 1}, [[1, 1], [2, 2], [2, 2]]))
    assert find_counterexample(left, right) == "aa"
    assert find_counterexample(left, left) is None


def test_counterexample_maps_letters_by_symbol():
    left = Dfa("ab", 2, 0, {1}, [[1, 0], [1, 0]])
    right = Dfa("ba", 2, 0, {1}, [[0, 1], [0, 1]])
    assert equivalent(left, right)
    with pytest.raises(InputError, match="alphabets differ"):
        equivalent(left, Dfa("a", 1, 0, set(), [[0]]))


def test_determinization_cap():
    n = 12
    # the language "the n-th letter from the end is a" needs 2^n subsets
    rows = [[{0, 1}, {0}]] + [[{q + 1}, {q + 1}] for q in range(1, n)] + [[set(), set()]]
    nfa = Nfa("ab", n + 1, {0}, {n}, rows)
    with pytest.raises(ResourceLimitError, match="cap of 100"):
        determinize_union(nfa, cap=100)
    assert minimize(determinize_union(nfa)).state_count == 2 ** n


def test_words_order():
    assert list(words("ab", 2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]


@given(dfas())
def test_minimize_matches_myhill_nerode(d):
    m = minimize(d)
    assert m.state_count == brute_minimal_dfa_size(d, 6)
    assert language_set(m, 6) == language_set(d, 6)
    assert is_minimal(m)


@given(dfas())
def test_minimize_is_idempotent_and_canonical(d):
    m = minimize(d)
    assert minimize(m) == m
    assert canonical(m) == m
    if is_minimal(d):
        assert isomorphic(m, d)


@given(dfas(), dfas())
def test_equivalence_agrees_with_minimal_isomorphism(a, b):
    assert equivalent(a, b) == isomorphic(minimize(a), minimize(b))
    w = find_counterexample(a, b)
    if w is not None:
        assert a.accepts(w) != b.accepts(w)
    if w:
        for shorter in words(a.alphabet, len(w) - 1):
            assert a.accepts(shorter) == b.accepts(shorter)


@given(branching(Nfa))
def test_union_determinization_preserves_language(n):
    d = determinize_union(n)
    for w in words(n.alphabet, 5):
        assert d.accepts(w) == n.accepts(w)


@given(branching(Xfa))
def test_xor_determinization_preserves_language(x):
    d = determinize_xor(x)
    for w in words(x.alphabet, 5):
        assert d.accepts(w) == x.accepts(w)


@given(dfas())
def test_dfa_as_branching(d):
    assert equivalent(as_nfa(d), d)
    assert equivalent(as_xfa(d), d)
    assert to_dfa(d) is d


@settings(max_examples=50)
@given(branching(Xfa, max_states=3))
def test_xor_linearity(x):
    # the language of a sum of initial vectors is the symmetric difference
    for s in range(x.state_count):
        for t in range(x.state_count):
            both = x.with_initials({s} ^ {t})
            for w in words(x.alphabet, 4):
                lhs = both.accepts(w)
                rhs = x.with_initials({s}).accepts(w) != x.with_initials({t}).accepts(w)
                assert lhs == (rhs if s != t else False)
