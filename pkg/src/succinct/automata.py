"""Deterministic, nondeterministic and GF(2)-weighted automata.

All automata share the same shape: states are ``0..state_count-1`` and the
alphabet is an ordered tuple of single-character symbols, so words are plain
strings.  Values are immutable; every operation returns a new automaton.

Subsets of states are handled internally as int bitmasks (bit ``q`` set means
state ``q`` is a member).  The same encoding doubles as a GF(2) vector, which
is what the xor semantics works with.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import InputError, ResourceLimitError

DEFAULT_STATE_CAP = 2**20


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _check_alphabet(alphabet: Sequence[str]) -> None:
    if len(set(alphabet)) != len(alphabet):
        raise InputError(f"alphabet has repeated symbols: {list(alphabet)!r}")
    for s in alphabet:
        if not isinstance(s, str) or len(s) != 1:
            raise InputError(f"alphabet symbols must be single characters, got {s!r}")


def _letter_index(alphabet: tuple[str, ...]) -> dict[str, int]:
    return {s: i for i, s in enumerate(alphabet)}


def _word_indices(index: dict[str, int], word: str) -> list[int]:
    try:
        return [index[c] for c in word]
    except KeyError as exc:
        raise InputError(f"symbol {exc.args[0]!r} is not in the alphabet") from None


@dataclass(frozen=True)
class Dfa:
    """Total deterministic automaton; ``delta[q][i]`` is the successor of
    ``q`` on ``alphabet[i]``."""

    alphabet: tuple[str, ...]
    state_count: int
    initial: int
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]
    minimal: bool = field(default=False, compare=False)
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        _check_alphabet(self.alphabet)
        n = self.state_count
        if n < 1:
            raise InputError("a DFA needs at least one state")
        if not 0 <= self.initial < n:
            raise InputError(f"initial state {self.initial} out of range")
        if any(not 0 <= q < n for q in self.finals):
            raise InputError("final states out of range")
        if len(self.delta) != n:
            raise InputError("transition table must have one row per state")
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise InputError(f"state {q} lacks a transition for some symbol")
            if any(not 0 <= t < n for t in row):
                raise InputError(f"state {q} has a transition out of range")
        if self.labels is not None and len(self.labels) != n:
            raise InputError("labels must have one entry per state")

    @cached_property
    def letter_index(self) -> dict[str, int]:
        return _letter_index(self.alphabet)

    @cached_property
    def final_mask(self) -> int:
        return mask_of(self.finals)

    def step(self, state: int, symbol: str) -> int:
        return self.delta[state][_word_indices(self.letter_index, symbol)[0]]

    def run(self, word: str, start: int | None = None) -> int:
        q = self.initial if start is None else start
        for i in _word_indices(self.letter_index, word):
            q = self.delta[q][i]
        return q

    def accepts(self, word: str) -> bool:
        return dfa_accepts(self, word)

    def with_initial(self, initial: int) -> "Dfa":
        return Dfa(self.alphabet, self.state_count, initial, self.finals, self.delta,
                   labels=self.labels)


@dataclass(frozen=True)
class _Branching:
    """Shared shape of :class:`Nfa` and :class:`Xfa`."""

    alphabet: tuple[str, ...]
    state_count: int
    initials: frozenset[int]
    finals: frozenset[int]
    delta: tuple[tuple[frozenset[int], ...], ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(t) for t in row) for row in self.delta)
        )
        _check_alphabet(self.alphabet)
        n = self.state_count
        if n < 0:
            raise InputError("state count must be non-negative")
        for name, states in (("initial", self.initials), ("final", self.finals)):
            if any(not 0 <= q < n for q in states):
                raise InputError(f"{name} states out of range")
        if len(self.delta) != n:
            raise InputError("transition table must have one row per state")
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise InputError(f"state {q} needs one target set per symbol")
            for targets in row:
                if any(not 0 <= t < n for t in targets):
                    raise InputError(f"state {q} has a transition out of range")
        if self.labels is not None and len(self.labels) != n:
            raise InputError("labels must have one entry per state")

    @cached_property
    def letter_index(self) -> dict[str, int]:
        return _letter_index(self.alphabet)

    @cached_property
    def initial_mask(self) -> int:
        return mask_of(self.initials)

    @cached_property
    def final_mask(self) -> int:
        return mask_of(self.finals)

    @cached_property
    def delta_masks(self) -> tuple[tuple[int, ...], ...]:
        """``delta_masks[i][q]``: targets of ``q`` on letter ``i`` as a bitmask."""
        return tuple(
            tuple(mask_of(self.delta[q][i]) for q in range(self.state_count))
            for i in range(len(self.alphabet))
        )

    def with_initials(self, initials: Iterable[int]):
        return type(self)(self.alphabet, self.state_count, frozenset(initials),
                          self.finals, self.delta, self.labels)


class Nfa(_Branching):
    """Multi-initial nondeterministic automaton (a word is accepted when some
    run accepts it)."""

    def step_mask(self, subset: int, letter: int) -> int:
        row = self.delta_masks[letter]
        out = 0
        for q in bits(subset):
            out |= row[q]
        return out

    def accepts(self, word: str) -> bool:
        return nfa_accepts(self, word)


class Xfa(_Branching):
    """GF(2)-weighted automaton: a word is accepted when the number of
    accepting runs is odd."""

    def step_mask(self, vector: int, letter: int) -> int:
        row = self.delta_masks[letter]
        out = 0
        for q in bits(vector):
            out ^= row[q]
        return out

    def accepts(self, word: str) -> bool:
        return xfa_accepts(self, word)


Automaton = Union[Dfa, Nfa, Xfa]


def dfa_accepts(dfa: Dfa, word: str) -> bool:
    return dfa.run(word) in dfa.finals


def nfa_accepts(nfa: Nfa, word: str) -> bool:
    subset = nfa.initial_mask
    for i in _word_indices(nfa.letter_index, word):
        subset = nfa.step_mask(subset, i)
    return bool(subset & nfa.final_mask)


def xfa_accepts(xfa: Xfa, word: str) -> bool:
    vector = xfa.initial_mask
    for i in _word_indices(xfa.letter_index, word):
        vector = xfa.step_mask(vector, i)
    return bin(vector & xfa.final_mask).count("1") % 2 == 1


def _subset_dfa(aut: _Branching, accept, cap: int) -> Dfa:
    """Reachable subset (or vector) construction, BFS numbered."""
    start = aut.initial_mask
    number = {start: 0}
    order = [start]
    rows: list[tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        s = queue.popleft()
        row = []
        for i in range(len(aut.alphabet)):
            t = aut.step_mask(s, i)
            if t not in number:
                if len(number) >= cap:
                    raise ResourceLimitError("determinized state count", cap)
                number[t] = len(order)
                order.append(t)
                queue.append(t)
            row.append(number[t])
        rows.append(tuple(row))
    finals = frozenset(k for k, s in enumerate(order) if accept(s))
    return Dfa(aut.alphabet, len(order), 0, finals, rows)


def determinize_union(nfa: Nfa, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    fm = nfa.final_mask
    return _subset_dfa(nfa, lambda s: bool(s & fm), cap)


def determinize_xor(xfa: Xfa, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    fm = xfa.final_mask
    return _subset_dfa(xfa, lambda v: bin(v & fm).count("1") % 2 == 1, cap)


def to_dfa(aut: Automaton, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Determinize by the semantics matching the automaton's type."""
    if isinstance(aut, Dfa):
        return aut
    if isinstance(aut, Xfa):
        return determinize_xor(aut, cap)
    if isinstance(aut, Nfa):
        return determinize_union(aut, cap)
    raise TypeError(f"not an automaton: {type(aut).__name__}")


def as_nfa(dfa: Dfa) -> Nfa:
    return Nfa(dfa.alphabet, dfa.state_count, {dfa.initial}, dfa.finals,
               [[{t} for t in row] for row in dfa.delta])


def as_xfa(dfa: Dfa) -> Xfa:
    return Xfa(dfa.alphabet, dfa.state_count, {dfa.initial}, dfa.finals,
               [[{t} for t in row] for row in dfa.delta])


def reachable_order(dfa: Dfa) -> list[int]:
    """States reachable from the initial one, in BFS order (letters in
    alphabet order)."""
    seen = {dfa.initial}
    order = [dfa.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in dfa.delta[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def access_words(dfa: Dfa) -> list[str | None]:
    """Shortest (then alphabet-first) word reaching each state; ``None`` for
    unreachable states."""
    out: list[str | None] = [None] * dfa.state_count
    out[dfa.initial] = ""
    for q in reachable_order(dfa):
        for i, t in enumerate(dfa.delta[q]):
            if out[t] is None:
                out[t] = out[q] + dfa.alphabet[i]
    return out


def canonical(dfa: Dfa) -> Dfa:
    """Restrict to reachable states and renumber them in BFS order.

    Two DFAs are isomorphic on their reachable parts exactly when their
    canonical forms are equal.
    """
    order = reachable_order(dfa)
    new = {q: k for k, q in enumerate(order)}
    rows = [tuple(new[t] for t in dfa.delta[q]) for q in order]
    finals = frozenset(new[q] for q in order if q in dfa.finals)
    labels = tuple(dfa.labels[q] for q in order) if dfa.labels is not None else None
    return Dfa(dfa.alphabet, len(order), 0, finals, rows, minimal=dfa.minimal, labels=labels)


def state_classes(dfa: Dfa) -> list[int]:
    """Hopcroft partition refinement over *all* states.

    Returns a block number per state; two states share a block iff they
    accept the same language.
    """
    n = dfa.state_count
    k = len(dfa.alphabet)
    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for q in range(n):
        for i, t in enumerate(dfa.delta[q]):
            inverse[i][t].append(q)

    finals = set(dfa.finals)
    blocks = [b for b in (finals, set(range(n)) - finals) if b]
    block_of = [0] * n
    for b, members in enumerate(blocks):
        for q in members:
            block_of[q] = b
    pending = set(range(len(blocks)))
    while pending:
        splitter = frozenset(blocks[pending.pop()])
        for i in range(k):
            pre = set()
            for t in splitter:
                pre.update(inverse[i][t])
            touched: dict[int, set[int]] = {}
            for q in pre:
                touched.setdefault(block_of[q], set()).add(q)
            for b, inside in touched.items():
                if len(inside) == len(blocks[b]):
                    continue
                outside = blocks[b] - inside
                blocks[b] = inside
                nb = len(blocks)
                blocks.append(outside)
                for q in outside:
                    block_of[q] = nb
                if b in pending:
                    pending.add(nb)
                else:
                    pending.add(b if len(inside) <= len(outside) else nb)
    # renumber blocks by first member so the result does not depend on set order
    first: dict[int, int] = {}
    for q in range(n):
        first.setdefault(block_of[q], len(first))
    return [first[b] for b in block_of]


def minimize(dfa: Dfa) -> Dfa:
    """Minimal DFA for the same language, states numbered canonically."""
    trimmed = canonical(dfa)
    cls = state_classes(trimmed)
    count = max(cls) + 1
    rows: list[tuple[int, ...] | None] = [None] * count
    for q in range(trimmed.state_count):
        if rows[cls[q]] is None:
            rows[cls[q]] = tuple(cls[t] for t in trimmed.delta[q])
    finals = frozenset(cls[q] for q in trimmed.finals)
    c = canonical(Dfa(dfa.alphabet, count, cls[0], finals, rows))
    return Dfa(c.alphabet, c.state_count, c.initial, c.finals, c.delta, minimal=True)


def is_minimal(dfa: Dfa) -> bool:
    """All states reachable and pairwise inequivalent."""
    return (len(reachable_order(dfa)) == dfa.state_count
            and len(set(state_classes(dfa))) == dfa.state_count)


def isomorphic(a: Dfa, b: Dfa) -> bool:
    """Isomorphism of the reachable parts (labels and flags ignored)."""
    ca, cb = canonical(a), canonical(b)
    return (ca.alphabet == cb.alphabet and ca.state_count == cb.state_count
            and ca.finals == cb.finals and ca.delta == cb.delta)


def find_counterexample(left: Automaton, right: Automaton,
                        cap: int = DEFAULT_STATE_CAP) -> str | None:
    """Shortest word on which the two automata disagree, or ``None``.

    Ties between words of equal length are broken by alphabet order of the
    left automaton.
    """
    if set(left.alphabet) != set(right.alphabet):
        raise InputError(
            f"alphabets differ: {''.join(left.alphabet)!r} vs {''.join(right.alphabet)!r}"
        )
    a, b = to_dfa(left, cap), to_dfa(right, cap)
    perm = [b.letter_index[s] for s in a.alphabet]
    start = (a.initial, b.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in a.finals) != (q in b.finals):
            word = []
            node = pair
            while parent[node] is not None:
                node, sym = parent[node]
                word.append(sym)
            return "".join(reversed(word))
        for i, sym in enumerate(a.alphabet):
            nxt = (a.delta[p][i], b.delta[q][perm[i]])
            if nxt not in parent:
                parent[nxt] = (pair, sym)
                queue.append(nxt)
    return None


def equivalent(left: Automaton, right: Automaton, cap: int = DEFAULT_STATE_CAP) -> bool:
    return find_counterexample(left, right, cap) is None


def words(alphabet: Sequence[str], max_length: int) -> Iterable[str]:
    """All words up to ``max_length`` in length-lexicographic order."""
    layer = [""]
    yield ""
    for _ in range(max_length):
        layer = [w + s for w in layer for s in alphabet]
        yield from layer
