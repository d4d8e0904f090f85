"""Profiles of words, i.e. the atoms of a regular language.

The profile of a word ``w`` with respect to a DFA is the set of states from
which ``w`` is accepted.  Profiles satisfy ``profile(a w) = preimage_a(profile(w))``
with ``preimage_a(p) = {q | delta(q, a) in p}``, so the profiles that actually
occur are found by a reverse subset construction starting from the final
states.  For a minimal DFA each occurring profile names one atom of the
language: the words sharing that profile.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .automata import Dfa, access_words, bits
from .errors import InputError, ResourceLimitError

DEFAULT_PROFILE_CAP = 2**16


@dataclass(frozen=True)
class ProfileSystem:
    base: Dfa
    profiles: tuple[int, ...]
    """Each profile as a bitmask over base states."""
    eps_profile: int
    preimage: tuple[tuple[int, ...], ...]
    """``preimage[p][i]``: index of ``preimage_{alphabet[i]}(profiles[p])``."""
    witness: tuple[str, ...]
    """Shortest word having each profile.  Words grow by prepending letters,
    so ties go to the shortlex-least reversed word."""

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.base.alphabet

    def __len__(self) -> int:
        return len(self.profiles)

    @cached_property
    def index(self) -> dict[int, int]:
        return {p: k for k, p in enumerate(self.profiles)}

    @property
    def full(self) -> int:
        """The closure element containing every profile (the language A*)."""
        return (1 << len(self.profiles)) - 1

    def states(self, k: int) -> frozenset[int]:
        return frozenset(bits(self.profiles[k]))

    def residual(self, q: int) -> int:
        """The residual of base state ``q`` as a set of profile indices."""
        out = 0
        for k, p in enumerate(self.profiles):
            if p >> q & 1:
                out |= 1 << k
        return out

    @cached_property
    def residuals(self) -> tuple[int, ...]:
        return tuple(self.residual(q) for q in range(self.base.state_count))

    @cached_property
    def access(self) -> list[str | None]:
        return access_words(self.base)

    def letter(self, symbol: str) -> int:
        try:
            return self.base.letter_index[symbol]
        except KeyError:
            raise InputError(f"symbol {symbol!r} is not in the alphabet") from None


def profile_system(dfa: Dfa, cap: int = DEFAULT_PROFILE_CAP) -> ProfileSystem:
    """Profile system of an arbitrary DFA (its initial state is irrelevant)."""
    n = dfa.state_count
    k = len(dfa.alphabet)
    start = dfa.final_mask
    number = {start: 0}
    order = [start]
    witness = [""]
    rows: list[tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        p = queue.popleft()
        w = witness[number[p]]
        row = []
        for i, sym in enumerate(dfa.alphabet):
            pre = 0
            for q in range(n):
                if p >> dfa.delta[q][i] & 1:
                    pre |= 1 << q
            if pre not in number:
                if len(order) >= cap:
                    raise ResourceLimitError("profile count", cap)
                number[pre] = len(order)
                order.append(pre)
                witness.append(sym + w)
                queue.append(pre)
            row.append(number[pre])
        rows.append(tuple(row))
    return ProfileSystem(dfa, tuple(order), 0, tuple(rows), tuple(witness))


def build_profiles(m: Dfa, cap: int = DEFAULT_PROFILE_CAP) -> ProfileSystem:
    if not m.minimal:
        raise InputError("build_profiles expects a DFA produced by minimize()")
    return profile_system(m, cap)


def profile_of(ps: ProfileSystem, word: str) -> int:
    """Index of the profile of ``word``, folding the word right to left."""
    k = ps.eps_profile
    for c in reversed(word):
        k = ps.preimage[k][ps.letter(c)]
    return k


def profile_by_simulation(dfa: Dfa, word: str) -> frozenset[int]:
    """The profile of ``word`` computed directly by running it from every state."""
    return frozenset(q for q in range(dfa.state_count) if dfa.run(word, q) in dfa.finals)
