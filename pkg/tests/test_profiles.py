from __future__ import annotations

import pytest
from hypothesis import example, given, settings

from succinct.automata import Dfa, minimize, words
from succinct.errors import InputError
from succinct.profiles import build_profiles, profile_by_simulation, profile_of, profile_system
from succinct.regex import compile_regex
from test_automata import dfas


def test_example_profiles(example):
    assert example.profiles == (0b10, 0b11, 0b00)
    assert example.witness == ("", "a", "b")
    assert len(example) == 3
    assert example.residuals == (0b010, 0b011)
    assert example.preimage == ((1, 2), (1, 1), (2, 2))


def test_profiles_need_minimal_dfa():
    with pytest.raises(InputError, match="minimize"):
        build_profiles(Dfa("a", 1, 0, {0}, [[0]]))


def test_witness_has_its_profile(example):
    for k, w in enumerate(example.witness):
        assert profile_of(example, w) == k


def test_profile_of_rejects_unknown_symbol(example):
    with pytest.raises(InputError):
        profile_of(example, "abc")


def test_universal_language_has_one_atom():
    ps = build_profiles(compile_regex("(a+b)*", "ab"))
    assert ps.profiles == (1,)


def test_empty_language_has_one_empty_profile():
    ps = build_profiles(compile_regex("~0", "ab"))
    assert ps.profiles == (0,)
    assert ps.residuals == (0,)


@settings(max_examples=60, deadline=None)
@given(dfas())
@example(Dfa("ab", 5, 0, {1}, [[0, 3], [0, 0], [0, 1], [2, 2], [0, 0]]))  # a witness of length 7
@example(Dfa("ab", 5, 1, {0}, [[0, 0], [0, 2], [1, 4], [0, 0], [2, 0]]))  # "baa" before "abb"
def test_profiles_match_simulation(d):
    m = minimize(d)
    ps = build_profiles(m)
    first = {}
    # reversed words in shortlex order: the witness order
    for v in words(m.alphabet, 6):
        w = v[::-1]
        k = profile_of(ps, w)
        assert ps.states(k) == profile_by_simulation(m, w)
        first.setdefault(k, w)
    # every profile is realized by its witness, the first one in that order
    for k, w in enumerate(ps.witness):
        assert ps.states(k) == profile_by_simulation(m, w)
        assert first.get(k, w) == w
        if k not in first:
            assert len(w) > 6
    assert len(set(ps.profiles)) == len(ps)


@settings(max_examples=60, deadline=None)
@given(dfas())
def test_atoms_partition_words_and_residuals_are_unions(d):
    m = minimize(d)
    ps = build_profiles(m)
    for w in words(m.alphabet, 5):
        k = profile_of(ps, w)
        for q in range(m.state_count):
            # w lies in the residual of q iff its atom belongs to it
            assert (m.run(w, q) in m.finals) == bool(ps.residual(q) >> k & 1)


@given(dfas())
def test_profile_system_works_on_any_dfa(d):
    ps = profile_system(d)
    for w in words(d.alphabet, 4):
        assert ps.states(profile_of(ps, w)) == profile_by_simulation(d, w)
