"""Regular expressions over a declared alphabet.

Grammar (loosest binding first)::

    union   := concat (('|' | '+') concat)*
    concat  := star star*
    star    := atom '*'*
    atom    := SYMBOL | '(' union ')' | '~e' | '~0'

``~e`` is the empty word, ``~0`` the empty language.  Whitespace is ignored.

Regexes compile to minimal DFAs through the position (Glushkov) automaton.
Brzozowski derivatives are provided separately as a membership oracle that
never touches the automaton code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .automata import Dfa, Nfa, determinize_union, minimize
from .errors import InputError, RegexSyntaxError

RESERVED = set("|+*()~")


class Regex:
    """Base class of the syntax tree nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(Regex):
    def __str__(self):
        return "~0"


@dataclass(frozen=True)
class Epsilon(Regex):
    def __str__(self):
        return "~e"


@dataclass(frozen=True)
class Symbol(Regex):
    char: str

    def __str__(self):
        return self.char


@dataclass(frozen=True)
class Union(Regex):
    left: Regex
    right: Regex

    def __str__(self):
        return f"{self.left}+{self.right}"


@dataclass(frozen=True)
class Concat(Regex):
    left: Regex
    right: Regex

    def __str__(self):
        return f"{_wrap(self.left, Union)}{_wrap(self.right, Union)}"


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex

    def __str__(self):
        return f"{_wrap(self.inner, (Union, Concat, Star))}*"


def _wrap(node: Regex, kinds) -> str:
    return f"({node})" if isinstance(node, kinds) else str(node)


EMPTY = Empty()
EPSILON = Epsilon()


def check_alphabet(alphabet: Sequence[str]) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    for s in alphabet:
        if len(s) != 1 or s in RESERVED or s.isspace():
            raise InputError(f"{s!r} cannot be used as an alphabet symbol")
    if len(set(alphabet)) != len(alphabet):
        raise InputError("alphabet has repeated symbols")
    return alphabet


class _Parser:
    def __init__(self, text: str, alphabet: tuple[str, ...]):
        self.text = text
        self.alphabet = set(alphabet)
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Regex:
        node = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return node

    def union(self) -> Regex:
        node = self.concat()
        while self.peek() in ("|", "+"):
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self) -> Regex:
        node = self.star()
        while (c := self.peek()) is not None and c not in "|+)":
            node = Concat(node, self.star())
        return node

    def star(self) -> Regex:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> Regex:
        c = self.peek()
        if c is None:
            raise RegexSyntaxError("unexpected end of expression", self.pos)
        if c == "(":
            self.pos += 1
            node = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return node
        if c == "~":
            nxt = self.text[self.pos + 1: self.pos + 2]
            if nxt == "e":
                self.pos += 2
                return EPSILON
            if nxt == "0":
                self.pos += 2
                return EMPTY
            raise RegexSyntaxError("expected '~e' or '~0'", self.pos)
        if c in "|+*)":
            raise RegexSyntaxError(f"unexpected {c!r}", self.pos)
        if c not in self.alphabet:
            raise InputError(f"symbol {c!r} at position {self.pos} is not in the alphabet")
        self.pos += 1
        return Symbol(c)


def parse_regex(text: str, alphabet: Sequence[str]) -> Regex:
    return _Parser(text, check_alphabet(alphabet)).parse()


# -- position automaton ------------------------------------------------------

def _glushkov(node: Regex, symbols: list[str], follow: list[set[int]]):
    """Returns (nullable, first, last) and fills ``symbols``/``follow``."""
    if isinstance(node, Empty):
        return False, set(), set()
    if isinstance(node, Epsilon):
        return True, set(), set()
    if isinstance(node, Symbol):
        symbols.append(node.char)
        follow.append(set())
        p = len(symbols)
        return False, {p}, {p}
    if isinstance(node, Union):
        n1, f1, l1 = _glushkov(node.left, symbols, follow)
        n2, f2, l2 = _glushkov(node.right, symbols, follow)
        return n1 or n2, f1 | f2, l1 | l2
    if isinstance(node, Concat):
        n1, f1, l1 = _glushkov(node.left, symbols, follow)
        n2, f2, l2 = _glushkov(node.right, symbols, follow)
        for p in l1:
            follow[p - 1] |= f2
        return n1 and n2, f1 | f2 if n1 else f1, l1 | l2 if n2 else l2
    if isinstance(node, Star):
        _, f, l = _glushkov(node.inner, symbols, follow)
        for p in l:
            follow[p - 1] |= f
        return True, f, l
    raise TypeError(f"not a regex node: {node!r}")


def position_automaton(node: Regex, alphabet: Sequence[str]) -> Nfa:
    """Glushkov automaton: state 0 is initial, state ``p`` is position ``p``."""
    alphabet = check_alphabet(alphabet)
    symbols: list[str] = []
    follow: list[set[int]] = []
    nullable, first, last = _glushkov(node, symbols, follow)
    n = len(symbols) + 1
    delta = [[set() for _ in alphabet] for _ in range(n)]
    index = {s: i for i, s in enumerate(alphabet)}
    for p in first:
        delta[0][index[symbols[p - 1]]].add(p)
    for p in range(1, n):
        for r in follow[p - 1]:
            delta[p][index[symbols[r - 1]]].add(r)
    finals = set(last) | ({0} if nullable else set())
    return Nfa(alphabet, n, {0}, finals, delta)


def regex_to_min_dfa(node: Regex, alphabet: Sequence[str]) -> Dfa:
    return minimize(determinize_union(position_automaton(node, alphabet)))


def compile_regex(text: str, alphabet: Sequence[str]) -> Dfa:
    return regex_to_min_dfa(parse_regex(text, alphabet), alphabet)


# -- derivatives (oracle) ----------------------------------------------------

def _union(a: Regex, b: Regex) -> Regex:
    if isinstance(a, Empty):
        return b
    if isinstance(b, Empty) or a == b:
        return a
    return Union(a, b)


def _concat(a: Regex, b: Regex) -> Regex:
    if isinstance(a, Empty) or isinstance(b, Empty):
        return EMPTY
    if isinstance(a, Epsilon):
        return b
    if isinstance(b, Epsilon):
        return a
    return Concat(a, b)


def regex_nullable(node: Regex) -> bool:
    if isinstance(node, (Epsilon, Star)):
        return True
    if isinstance(node, (Empty, Symbol)):
        return False
    if isinstance(node, Union):
        return regex_nullable(node.left) or regex_nullable(node.right)
    if isinstance(node, Concat):
        return regex_nullable(node.left) and regex_nullable(node.right)
    raise TypeError(f"not a regex node: {node!r}")


def regex_derive(node: Regex, symbol: str) -> Regex:
    if isinstance(node, (Empty, Epsilon)):
        return EMPTY
    if isinstance(node, Symbol):
        return EPSILON if node.char == symbol else EMPTY
    if isinstance(node, Union):
        return _union(regex_derive(node.left, symbol), regex_derive(node.right, symbol))
    if isinstance(node, Concat):
        head = _concat(regex_derive(node.left, symbol), node.right)
        if regex_nullable(node.left):
            return _union(head, regex_derive(node.right, symbol))
        return head
    if isinstance(node, Star):
        return _concat(regex_derive(node.inner, symbol), node)
    raise TypeError(f"not a regex node: {node!r}")


def regex_member(node: Regex, word: str) -> bool:
    for c in word:
        node = regex_derive(node, c)
    return regex_nullable(node)


# -- random expressions ------------------------------------------------------

def random_regex(rng: random.Random, alphabet: Sequence[str], depth: int) -> Regex:
    """Random syntax tree of depth at most ``depth`` (a leaf has depth 1)."""
    if depth <= 1 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.05:
            return EMPTY
        if r < 0.12:
            return EPSILON
        return Symbol(rng.choice(list(alphabet)))
    op = rng.choice(("union", "concat", "concat", "star"))
    if op == "star":
        return Star(random_regex(rng, alphabet, depth - 1))
    left = random_regex(rng, alphabet, depth - 1)
    right = random_regex(rng, alphabet, depth - 1)
    return Union(left, right) if op == "union" else Concat(left, right)


def regex_depth(node: Regex) -> int:
    if isinstance(node, (Union, Concat)):
        return 1 + max(regex_depth(node.left), regex_depth(node.right))
    if isinstance(node, Star):
        return 1 + regex_depth(node.inner)
    return 1
