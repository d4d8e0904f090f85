from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import language_set, relabel_isomorphic
from succinct.automata import (
    Dfa, Nfa, equivalent, isomorphic, minimize, to_dfa, words,
)
from succinct.builders import (
    CONSTRUCTIONS, atomaton, build_succinct, canonical_rfsa, construct, distromaton,
    language_dfa, minimal_xor, minimal_xor_caba,
)
from succinct.closures import caba_closure, closure_dfa, csl_closure, derivative, vec_closure
from succinct.errors import InputError, NotAGeneratorError
from succinct.generators import GeneratorSet, join_irreducibles
from succinct.profiles import build_profiles, profile_of
from succinct.regex import compile_regex
from test_automata import dfas
from test_generators import NUMBERED, DEPENDENT_SET

L = "(a+b)*a"


def test_canonical_rfsa_fixture():
    aut = canonical_rfsa(L, "ab").automaton
    assert isinstance(aut, Nfa)
    assert relabel_isomorphic(
        aut, ["x", "y"], ["x"], ["y"],
        {("x", "a", "x"), ("x", "a", "y"), ("x", "b", "x"),
         ("y", "a", "x"), ("y", "a", "y"), ("y", "b", "x")},
    )


def test_atomaton_fixture():
    aut = atomaton(L, "ab").automaton
    assert relabel_isomorphic(
        aut, ["[a]", "[b]", "[e]"], ["[a]"], ["[e]"],
        {("[a]", "a", "[a]"), ("[a]", "b", "[a]"), ("[a]", "a", "[e]"),
         ("[b]", "a", "[b]"), ("[b]", "b", "[b]"), ("[b]", "b", "[e]")},
    )
    assert aut.labels == ("[ε]", "[a]", "[b]")


def test_distromaton_fixture():
    aut = distromaton(L, "ab").automaton
    edges = {("x", "a", "x"), ("x", "a", "y"), ("x", "b", "x"),
             ("y", "a", "x"), ("y", "a", "y"), ("y", "b", "x")}
    edges |= {("top", c, t) for c in "ab" for t in ("x", "y", "top")}
    assert relabel_isomorphic(aut, ["x", "y", "top"], ["x"], ["y", "top"], edges)


def test_minimal_xor_fixture():
    prefix = minimal_xor(L, "ab", basis="paper-fig6").automaton
    assert relabel_isomorphic(
        prefix, ["u", "v"], ["u"], ["v"], {("u", "a", "u"), ("u", "b", "u"), ("u", "a", "v")},
    )
    greedy = minimal_xor(L, "ab")
    assert greedy.state_count == 2 and greedy.generator.elements == (NUMBERED[1], NUMBERED[5])


def test_xor_caba_with_dependent_generator():
    ps = build_profiles(compile_regex(L, "ab"))
    aut = minimal_xor_caba(ps, custom=DEPENDENT_SET)
    assert not aut.generator.is_basis
    assert relabel_isomorphic(
        aut.automaton, [4, 6, 7, 8], [7, 8], [6, 7, 8],
        {(7, "a", 7), (7, "b", 7), (7, "a", 6), (8, "a", 8), (8, "b", 8),
         (4, "a", 8), (4, "b", 8)},
    )
    assert equivalent(aut.automaton, ps.base)


def test_xor_caba_default_has_atomaton_graph():
    x = minimal_xor_caba(L, "ab").automaton
    u = atomaton(L, "ab").automaton
    assert x.state_count == 3
    assert (x.initials, x.finals, x.delta) == (u.initials, u.finals, u.delta)


@pytest.mark.parametrize("name, size", [
    ("rfsa", 0), ("atomaton", 1), ("distromaton", 1), ("xor", 0), ("xor-caba", 1),
])
def test_empty_language(name, size):
    aut = construct(name, "~0", "ab").automaton
    assert aut.state_count == size
    assert not aut.initials
    assert not any(aut.accepts(w) for w in words("ab", 3))


@pytest.mark.parametrize("name", CONSTRUCTIONS)
def test_universal_language_single_state(name):
    aut = construct(name, "(a+b)*", "ab").automaton
    assert aut.state_count == 1
    assert aut.initials == {0} and aut.finals == {0}
    assert aut.delta == ((frozenset({0}), frozenset({0})),)


def test_refuses_invalid_generator(example):
    alg = csl_closure(example)
    bad = GeneratorSet(alg, (example.residuals[0],), "union", False, lambda x: 1)
    with pytest.raises(NotAGeneratorError, match="generator law fails at"):
        build_succinct(alg, bad)
    with pytest.raises(InputError, match="different algebra"):
        build_succinct(vec_closure(example), join_irreducibles(alg))


def test_unknown_construction_and_basis():
    with pytest.raises(InputError, match="unknown construction"):
        construct("brzozowski", L, "ab")
    with pytest.raises(InputError, match="unknown basis"):
        minimal_xor(L, "ab", basis="nope")
    with pytest.raises(InputError, match="needs an alphabet"):
        language_dfa(L)


def test_sources_agree():
    m = compile_regex(L, "ab")
    n = canonical_rfsa(L, "ab").automaton
    for source in (m, Dfa(m.alphabet, m.state_count, m.initial, m.finals, m.delta), n):
        assert canonical_rfsa(source).automaton == n


def test_large_caba_skips_materialization():
    # 32 atoms: the Boolean closure cannot be enumerated, the builders still work
    ps = build_profiles(compile_regex("(a+b)(a+b)(a+b)(a+b)a(a+b)*", "ab"))
    assert len(ps) == 32
    for build in (atomaton, minimal_xor_caba):
        aut = build(ps).automaton
        assert aut.state_count == 32 and equivalent(aut, ps.base)


def test_state_languages_follow_generators(example):
    for name in CONSTRUCTIONS:
        s = construct(name, example)
        for q, y in enumerate(s.generator.elements):
            lang = minimize(to_dfa(s.automaton.with_initials({q})))
            assert isomorphic(lang, closure_dfa_for(example, y))


def closure_dfa_for(ps, element):
    """Minimal DFA of the language denoted by a set of profiles."""
    alg = caba_closure(ps)
    d = closure_dfa(alg)
    return minimize(d.with_initial(alg.position[element]))


@settings(max_examples=60, deadline=None)
@given(dfas(max_states=5))
def test_constructions_preserve_language(d):
    m = minimize(d)
    ps = build_profiles(m)
    for name in CONSTRUCTIONS:
        s = construct(name, ps)
        assert equivalent(s.automaton, m), name


@settings(max_examples=40, deadline=None)
@given(dfas(max_states=4))
def test_state_language_law(d):
    m = minimize(d)
    ps = build_profiles(m)
    for name in CONSTRUCTIONS:
        s = construct(name, ps)
        for q, y in enumerate(s.generator.elements):
            single = s.automaton.with_initials({q})
            for w in words(m.alphabet, 6 if len(m.alphabet) < 3 else 4):
                assert single.accepts(w) == bool(y >> profile_of(ps, w) & 1)


@settings(max_examples=40, deadline=None)
@given(dfas(max_states=5))
def test_canonicity_is_idempotent(d):
    m = minimize(d)
    for name in CONSTRUCTIONS:
        once = construct(name, m)
        twice = construct(name, once.automaton)
        assert twice.state_count == once.state_count


@settings(max_examples=40, deadline=None)
@given(dfas(max_states=4))
def test_determinization_maps_into_closure(d):
    m = minimize(d)
    ps = build_profiles(m)
    for name in CONSTRUCTIONS:
        s = construct(name, ps)
        gen, aut = s.generator, s.automaton
        start = aut.initial_mask
        seen = {start}
        todo = [start]
        while todo:
            phi = todo.pop()
            x = gen.combine(phi)
            assert x in gen.algebra
            for i in range(len(m.alphabet)):
                nxt = aut.step_mask(phi, i)
                assert gen.combine(nxt) == derivative(ps, x, i)
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        if gen.is_basis:
            # a basis embeds the determinized automaton into the closure
            assert len({gen.combine(phi) for phi in seen}) == len(seen)


def test_atoms_determinize_onto_caba(example):
    aut = atomaton(example).automaton
    assert to_dfa(aut).state_count == 2
    # started from every subset of atoms, all eight languages appear
    langs = {language_set(aut.with_initials({j for j in range(3) if init >> j & 1}), 5)
             for init in range(8)}
    assert len(langs) == 8
