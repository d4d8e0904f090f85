"""GF(2) linear algebra on int bitsets."""

from __future__ import annotations

from typing import Sequence


def rank(vectors: Sequence[int]) -> int:
    return len(_echelon(vectors))


def _echelon(vectors: Sequence[int]) -> dict[int, int]:
    rows: dict[int, int] = {}  # pivot bit -> row
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in rows:
                rows[top] = v
                break
            v ^= rows[top]
    return rows


class Solver:
    """Expresses vectors as xor-combinations of an ordered generator list.

    Combinations are bitmasks over generator positions.  When the generators
    are dependent, :meth:`solve` returns the lexicographically least
    combination, reading position 0 as the most significant coordinate: later
    generators are preferred over earlier ones.
    """

    def __init__(self, generators: Sequence[int]):
        self.generators = tuple(generators)
        # pivot bit -> (reduced vector, combination producing it)
        self._rows: dict[int, tuple[int, int]] = {}
        self.dependencies: list[int] = []
        for j in reversed(range(len(self.generators))):
            v, combo = self._reduce(self.generators[j], 1 << j)
            if v:
                self._rows[v.bit_length() - 1] = (v, combo)
            else:
                self.dependencies.append(combo)
        self.dependencies.reverse()

    def _reduce(self, v: int, combo: int) -> tuple[int, int]:
        while v:
            top = v.bit_length() - 1
            row = self._rows.get(top)
            if row is None:
                break
            v ^= row[0]
            combo ^= row[1]
        return v, combo

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def independent(self) -> bool:
        return not self.dependencies

    def solve(self, target: int) -> int | None:
        rest, combo = self._reduce(target, 0)
        return None if rest else combo

    def spans(self, target: int) -> bool:
        return self.solve(target) is not None


def combine(generators: Sequence[int], combo: int) -> int:
    out = 0
    j = 0
    while combo:
        if combo & 1:
            out ^= generators[j]
        combo >>= 1
        j += 1
    return out
