from __future__ import annotations

import itertools
import random

import pytest

from succinct import build_profiles, compile_regex
from succinct.automata import Dfa, Nfa, words
from succinct.regex import random_regex

CORPUS_SEED = 20240917
CORPUS_SIZE = 200

# languages that make each closure-equality flag true
FLAG_LANGUAGES = [("(a+b)*", "ab"), ("(aa)*", "a"), ("a*", "a"), ("(a+b+c)*", "abc")]


def random_corpus(n: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list[tuple[str, str]]:
    """Random regexes (alphabet size at most 3, depth at most 6) plus the
    flag languages, as (text, alphabet) pairs."""
    rng = random.Random(seed)
    out = list(FLAG_LANGUAGES)
    while len(out) < n:
        alphabet = rng.choice(["a", "ab", "abc"])
        out.append((str(random_regex(rng, alphabet, 6)), alphabet))
    return out


_CACHE: dict = {}


def corpus_systems():
    if "systems" not in _CACHE:
        _CACHE["systems"] = [(r, al, build_profiles(compile_regex(r, al))) for r, al in random_corpus()]
    return _CACHE["systems"]


@pytest.fixture(scope="session")
def corpus():
    return corpus_systems()


@pytest.fixture(scope="session")
def example():
    """The running example (a+b)*a over {a, b}."""
    return build_profiles(compile_regex("(a+b)*a", "ab"))


def relabel_isomorphic(aut, states, initials, finals, edges) -> bool:
    """Whether ``aut`` matches a hand-written fixture up to renaming states.

    ``edges`` is a set of (source, symbol, target) triples over the fixture's
    state names.
    """
    if aut.state_count != len(states):
        return False
    a_initials = {aut.initial} if isinstance(aut, Dfa) else set(aut.initials)
    a_edges = set()
    for q in range(aut.state_count):
        for i, c in enumerate(aut.alphabet):
            targets = [aut.delta[q][i]] if isinstance(aut, Dfa) else aut.delta[q][i]
            for t in targets:
                a_edges.add((q, c, t))
    for perm in itertools.permutations(range(aut.state_count)):
        name = dict(zip(states, perm))
        if ({name[s] for s in initials} == a_initials
                and {name[s] for s in finals} == set(aut.finals)
                and {(name[s], c, name[t]) for s, c, t in edges} == a_edges):
            return True
    return False


def brute_minimal_dfa_size(dfa: Dfa, length: int) -> int:
    """Number of Myhill-Nerode classes of the reachable states, separating
    states by acceptance of every word up to ``length``."""
    seen = {}
    for w in words(dfa.alphabet, length):
        seen.setdefault(dfa.run(w), w)
    sigs = set()
    for q in seen:
        sigs.add(tuple(dfa.run(w, q) in dfa.finals for w in words(dfa.alphabet, length)))
    return len(sigs)


def language_set(aut, length: int) -> frozenset[str]:
    return frozenset(w for w in words(aut.alphabet, length) if aut.accepts(w))


def nfa_from_edges(alphabet, n, initials, finals, edges, cls=Nfa):
    delta = [[set() for _ in alphabet] for _ in range(n)]
    for s, c, t in edges:
        delta[s][alphabet.index(c)].add(t)
    return cls(alphabet, n, initials, finals, delta)

