"""Closures of the residuals of a language under four operation sets.

Every language that is a Boolean combination of residuals is a union of
atoms, so it is stored as a bitmask over profile indices.  Two such sets
denote the same language iff they are equal, which makes the minimal
bialgebras directly computable:

* ``CSL``  unions (including the empty union)
* ``CDL``  unions and intersections (including empty join and meet)
* ``CABA`` all Boolean operations: every subset of the profiles
* ``VEC``  symmetric difference, i.e. the GF(2) span

The transition structure on such sets is
``derivative(S, a) = {p | preimage_a(p) in S}`` and ``S`` accepts the empty
word iff it contains the profile of the empty word.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .automata import Dfa, bits, mask_of, reachable_order
from .errors import InputError, ResourceLimitError
from .profiles import ProfileSystem

DEFAULT_CARRIER_CAP = 2**16
DEFAULT_CABA_CAP = 16
"""Largest profile count for which a CABA carrier is materialized."""


class Kind(str, enum.Enum):
    CSL = "csl"
    CDL = "cdl"
    CABA = "caba"
    VEC = "vec"


# -- closures of arbitrary seed families -------------------------------------

def union_closure(seeds: Sequence[int], cap: int = DEFAULT_CARRIER_CAP) -> list[int]:
    return _close([0, *seeds], seeds, operator.or_, cap)


def lattice_closure(seeds: Sequence[int], top: int, cap: int = DEFAULT_CARRIER_CAP) -> list[int]:
    # distributivity: every element is a join of meets of seeds
    meets = _close([top, *seeds], seeds, operator.and_, cap)
    return _close([0, *seeds, top, *meets], meets, operator.or_, cap)


def xor_span(seeds: Sequence[int], cap: int = DEFAULT_CARRIER_CAP) -> list[int]:
    return _close([0, *seeds], seeds, operator.xor, cap)


def _close(start, gens, op, cap) -> list[int]:
    """Closure of ``start`` under ``x -> op(x, g)`` for ``g`` in ``gens``,
    in generation order."""
    out: list[int] = []
    seen: set[int] = set()
    for s in start:
        if s not in seen:
            seen.add(s)
            out.append(s)
    i = 0
    while i < len(out):
        x = out[i]
        for g in gens:
            z = op(x, g)
            if z not in seen:
                if len(out) >= cap:
                    raise ResourceLimitError("closure carrier size", cap)
                seen.add(z)
                out.append(z)
        i += 1
    return out


def boolean_atoms(seeds: Sequence[int], width: int) -> list[int]:
    """Atoms of the Boolean algebra generated by ``seeds`` inside the
    powerset of ``width`` points: points grouped by which seeds contain them."""
    groups: dict[tuple[bool, ...], int] = {}
    for p in range(width):
        sig = tuple(bool(s >> p & 1) for s in seeds)
        groups[sig] = groups.get(sig, 0) | 1 << p
    return list(groups.values())


# -- the algebras over a language's profiles ---------------------------------

@dataclass(frozen=True)
class ClosureAlgebra:
    kind: Kind
    system: ProfileSystem
    residuals: tuple[int, ...]
    point: int
    explicit: tuple[int, ...] | None
    """The carrier in generation order; ``None`` for the implicit CABA."""
    caba_cap: int = DEFAULT_CABA_CAP
    join_dense: tuple[int, ...] | None = None
    """For lattices, a subset every carrier element is a union of."""

    @property
    def size(self) -> int:
        if self.explicit is None:
            return 1 << len(self.system)
        return len(self.explicit)

    @cached_property
    def carrier(self) -> tuple[int, ...]:
        if self.explicit is not None:
            return self.explicit
        if len(self.system) > self.caba_cap:
            raise ResourceLimitError("CABA profile count for materialization", self.caba_cap)
        return tuple(range(1 << len(self.system)))

    @cached_property
    def position(self) -> dict[int, int]:
        return {x: k for k, x in enumerate(self.carrier)}

    def __contains__(self, element: int) -> bool:
        if self.explicit is None:
            return 0 <= element <= self.system.full
        return element in self.position


def derivative(ps: ProfileSystem, element: int, symbol: str | int) -> int:
    i = symbol if isinstance(symbol, int) else ps.letter(symbol)
    out = 0
    for k in range(len(ps.profiles)):
        if element >> ps.preimage[k][i] & 1:
            out |= 1 << k
    return out


def accepts_empty(ps: ProfileSystem, element: int) -> bool:
    return bool(element >> ps.eps_profile & 1)


def _algebra(kind: Kind, ps: ProfileSystem, carrier, caba_cap=DEFAULT_CABA_CAP,
             join_dense=None) -> ClosureAlgebra:
    residuals = ps.residuals
    point = residuals[ps.base.initial]
    return ClosureAlgebra(kind, ps, residuals, point,
                          tuple(carrier) if carrier is not None else None, caba_cap,
                          tuple(join_dense) if join_dense is not None else None)


def csl_closure(ps: ProfileSystem, cap: int = DEFAULT_CARRIER_CAP) -> ClosureAlgebra:
    carrier = union_closure(ps.residuals, cap)
    return _algebra(Kind.CSL, ps, carrier, join_dense=ps.residuals)


def cdl_closure(ps: ProfileSystem, cap: int = DEFAULT_CARRIER_CAP) -> ClosureAlgebra:
    meets = _close([ps.full, *ps.residuals], ps.residuals, operator.and_, cap)
    carrier = _close([0, *ps.residuals, ps.full, *meets], meets, operator.or_, cap)
    return _algebra(Kind.CDL, ps, carrier, join_dense=meets)


def caba_closure(ps: ProfileSystem, cap: int = DEFAULT_CABA_CAP) -> ClosureAlgebra:
    return _algebra(Kind.CABA, ps, None, cap)


def vec_closure(ps: ProfileSystem, cap: int = DEFAULT_CARRIER_CAP) -> ClosureAlgebra:
    return _algebra(Kind.VEC, ps, xor_span(ps.residuals, cap))


CLOSURES = {
    Kind.CSL: csl_closure,
    Kind.CDL: cdl_closure,
    Kind.CABA: caba_closure,
    Kind.VEC: vec_closure,
}


def closure(ps: ProfileSystem, kind: Kind | str, cap: int | None = None) -> ClosureAlgebra:
    kind = Kind(kind)
    return CLOSURES[kind](ps) if cap is None else CLOSURES[kind](ps, cap)


def closure_dfa(alg: ClosureAlgebra) -> Dfa:
    """The underlying pointed DFA: states are the carrier elements."""
    ps = alg.system
    carrier = alg.carrier
    pos = alg.position
    k = len(ps.alphabet)
    rows = []
    for x in carrier:
        row = []
        for i in range(k):
            y = derivative(ps, x, i)
            if y not in pos:
                raise AssertionError(f"{alg.kind.value} carrier not closed under derivative")
            row.append(pos[y])
        rows.append(row)
    finals = {n for n, x in enumerate(carrier) if accepts_empty(ps, x)}
    labels = tuple(describe(ps, x) for x in carrier)
    dfa = Dfa(ps.alphabet, len(carrier), pos[alg.point], finals, rows, labels=labels)
    if len(reachable_order(dfa)) == dfa.state_count:
        dfa = Dfa(dfa.alphabet, dfa.state_count, dfa.initial, dfa.finals, dfa.delta,
                  minimal=True, labels=labels)
    return dfa


# -- naming ------------------------------------------------------------------

def atom_name(ps: ProfileSystem, k: int) -> str:
    w = ps.witness[k]
    return f"[{w or 'ε'}]"


def describe(ps: ProfileSystem, element: int) -> str:
    """Readable name of a closure element.

    Residuals are written ``u⁻¹L`` for their shortest access word ``u``,
    anything else as a join of atoms named by their witness words.
    """
    if element == 0:
        return "∅"
    residuals = ps.residuals
    if element in residuals and ps.base.minimal:
        u = ps.access[residuals.index(element)]
        return "L" if u == "" else f"{u}⁻¹L"
    if element == ps.full:
        return "A*"
    return "+".join(atom_name(ps, k) for k in bits(element))


def parse_element(ps: ProfileSystem, spec) -> int:
    """Closure element from a list of profiles, each given either as a
    witness word (str) or as a list of base-state indices."""
    from .profiles import profile_of

    out = 0
    for item in spec:
        if isinstance(item, str):
            k = profile_of(ps, item)
        else:
            try:
                k = ps.index[mask_of(int(q) for q in item)]
            except KeyError:
                raise InputError(f"{sorted(item)} is not a reachable profile") from None
        out |= 1 << k
    return out


# -- the free bialgebra route ------------------------------------------------

def free_bialgebra_dfa(m: Dfa, kind: Kind | str, cap: int = 2**16) -> tuple[Dfa, list[int]]:
    """Free bialgebra over ``m``, built from the pointwise transition formulas.

    Returns the DFA together with a list of its states encoded as the monad
    elements they are: subsets of ``m``'s states for CSL and VEC, families of
    such subsets (bitmask over subset codes) for CABA and CDL.  Only the CDL
    case restricts to up-closed families.

    This construction never looks at profiles and serves as the independent
    route to the closure carriers.
    """
    kind = Kind(kind)
    n = m.state_count
    k = len(m.alphabet)
    if kind in (Kind.CSL, Kind.VEC):
        if 1 << n > cap:
            raise ResourceLimitError("free bialgebra size", cap)
        elems = list(range(1 << n))
        fin = m.final_mask
        if kind is Kind.CSL:
            def step(phi, i):
                return mask_of(m.delta[q][i] for q in bits(phi))

            def final(phi):
                return bool(phi & fin)
        else:
            def step(phi, i):
                out = 0
                for q in bits(phi):
                    out ^= 1 << m.delta[q][i]
                return out

            def final(phi):
                return bin(phi & fin).count("1") % 2 == 1
        initial = 1 << m.initial
    else:
        if 1 << (1 << n) > cap:
            raise ResourceLimitError("free bialgebra size", cap)
        subsets = range(1 << n)
        pre = [[mask_of(q for q in range(n) if s >> m.delta[q][i] & 1) for s in subsets]
               for i in range(k)]
        elems = [fam for fam in range(1 << (1 << n))
                 if kind is Kind.CABA or _up_closed(fam, n)]

        def step(fam, i):
            # phi belongs to the successor iff preimage_a(phi) belongs to fam
            return mask_of(s for s in subsets if fam >> pre[i][s] & 1)

        def final(fam):
            return bool(fam >> m.final_mask & 1)

        initial = mask_of(s for s in subsets if s >> m.initial & 1)
    pos = {e: j for j, e in enumerate(elems)}
    rows = [[pos[step(e, i)] for i in range(k)] for e in elems]
    finals = {j for j, e in enumerate(elems) if final(e)}
    return Dfa(m.alphabet, len(elems), pos[initial], finals, rows), elems


def _up_closed(family: int, n: int) -> bool:
    for s in bits(family):
        for q in range(n):
            if not family >> (s | 1 << q) & 1:
                return False
    return True


def free_to_closure(ps: ProfileSystem, kind: Kind | str, element: int) -> int:
    """Evaluate a free-bialgebra element as a closure element over profiles."""
    kind = Kind(kind)
    res = ps.residuals
    if kind is Kind.CSL:
        out = 0
        for q in bits(element):
            out |= res[q]
        return out
    if kind is Kind.VEC:
        out = 0
        for q in bits(element):
            out ^= res[q]
        return out
    # a family of state subsets holds a word iff it contains the word's profile
    return mask_of(k for k, p in enumerate(ps.profiles) if element >> p & 1)
