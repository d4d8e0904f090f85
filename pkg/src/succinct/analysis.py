"""Closedness checks, closure statistics and desk-scale minimality oracles.

Languages of different automata are compared inside one joint profile
system: the DFA obtained as the disjoint union of all the automata involved
(branching automata are first determinized from every singleton), quotiented
by language equivalence.  Each state language is then a set of joint
profiles, and closures of such families can be compared exactly.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import gf2
from .automata import (
    DEFAULT_STATE_CAP, Automaton, Dfa, Nfa, Xfa, bits, equivalent, minimize, state_classes,
)
from .builders import (
    SuccinctAutomaton, atomaton, canonical_rfsa, distromaton, language_dfa, minimal_xor,
    minimal_xor_caba,
)
from .closures import (
    Kind, boolean_atoms, cdl_closure, csl_closure, describe, lattice_closure, union_closure,
    vec_closure, xor_span,
)
from .errors import InputError, ResourceLimitError
from .profiles import ProfileSystem, build_profiles, profile_system

PAIRS = {
    "csl/caba": (Kind.CSL, Kind.CABA),
    "csl/cdl": (Kind.CSL, Kind.CDL),
    "vec/caba": (Kind.VEC, Kind.CABA),
}


# -- joint profile systems ---------------------------------------------------

def _unwrap(aut):
    return aut.automaton if isinstance(aut, SuccinctAutomaton) else aut


def _all_states_dfa(aut: Automaton, cap: int) -> tuple[Dfa, list[int]]:
    """A DFA containing, for every state of ``aut``, a state with the same
    language; returns it with the list of those states."""
    if isinstance(aut, Dfa):
        return aut, list(range(aut.state_count))
    n = aut.state_count
    k = len(aut.alphabet)
    order = [1 << q for q in range(n)] or [0]
    number = {s: j for j, s in enumerate(order)}
    queue = deque(order)
    rows: dict[int, list[int]] = {}
    while queue:
        s = queue.popleft()
        row = []
        for i in range(k):
            t = aut.step_mask(s, i)
            if t not in number:
                if len(order) >= cap:
                    raise ResourceLimitError("joint subset construction", cap)
                number[t] = len(order)
                order.append(t)
                queue.append(t)
            row.append(number[t])
        rows[s] = row
    if isinstance(aut, Xfa):
        finals = {j for j, s in enumerate(order) if bin(s & aut.final_mask).count("1") % 2}
    else:
        finals = {j for j, s in enumerate(order) if s & aut.final_mask}
    dfa = Dfa(aut.alphabet, len(order), 0, finals, [rows[s] for s in order])
    return dfa, [number[1 << q] for q in range(n)]


@dataclass(frozen=True)
class JointSystem:
    system: ProfileSystem
    elements: tuple[tuple[int, ...], ...]
    """``elements[j][q]``: the language of state ``q`` of the ``j``-th automaton."""


def joint_system(automata: Sequence, cap: int = DEFAULT_STATE_CAP) -> JointSystem:
    if not automata:
        raise InputError("need at least one automaton")
    alphabet = _unwrap(automata[0]).alphabet
    parts = []
    for aut in automata:
        aut = _unwrap(aut)
        if set(aut.alphabet) != set(alphabet):
            raise InputError("automata over different alphabets")
        dfa, states = _all_states_dfa(aut, cap)
        if dfa.alphabet != alphabet:
            perm = [dfa.letter_index[c] for c in alphabet]
            dfa = Dfa(alphabet, dfa.state_count, dfa.initial, dfa.finals,
                      [[row[i] for i in perm] for row in dfa.delta])
        parts.append((dfa, states))
    offsets, rows, finals, total = [], [], set(), 0
    for dfa, _ in parts:
        offsets.append(total)
        rows.extend([t + total for t in row] for row in dfa.delta)
        finals.update(f + total for f in dfa.finals)
        total += dfa.state_count
    if total == 0:
        # no states at all: one dead state keeps the system well defined
        rows, total = [[0] * len(alphabet)], 1
    union = Dfa(alphabet, total, 0, finals, rows)
    cls = state_classes(union)
    count = max(cls) + 1
    q_rows = [None] * count
    for q in range(total):
        q_rows[cls[q]] = [cls[t] for t in union.delta[q]]
    quotient = Dfa(alphabet, count, 0, {cls[f] for f in finals}, q_rows)
    ps = profile_system(quotient)
    elements = tuple(
        tuple(ps.residual(cls[off + s]) for s in states)
        for off, (dfa, states) in zip(offsets, parts)
    )
    return JointSystem(ps, elements)


def state_languages(aut) -> list[Dfa]:
    """Minimal DFA of the language of each state taken as the only initial."""
    aut = _unwrap(aut)
    dfa, states = _all_states_dfa(aut, DEFAULT_STATE_CAP)
    return [minimize(dfa.with_initial(s)) for s in states]


# -- closedness --------------------------------------------------------------

def family_closure(seeds: Sequence[int], width: int, kind: Kind | str,
                   cap: int = 2**16) -> set[int] | None:
    """Closure of a family of profile sets; ``None`` for an implicit CABA."""
    kind = Kind(kind)
    top = (1 << width) - 1
    if kind is Kind.CSL:
        return set(union_closure(seeds, cap))
    if kind is Kind.CDL:
        return set(lattice_closure(seeds, top, cap))
    if kind is Kind.VEC:
        return set(xor_span(seeds, cap))
    return None


@dataclass(frozen=True)
class ClosednessVerdict:
    automaton: object = field(repr=False)
    pair: tuple[Kind, Kind]
    verdict: bool
    witness: str | None = None
    """A language in the larger closure but not the smaller one."""

    def __bool__(self) -> bool:
        return self.verdict


def closedness_check(aut, pair: str | tuple = "csl/caba") -> ClosednessVerdict:
    """Whether the two closures of the state languages coincide."""
    if isinstance(pair, str):
        try:
            kinds = PAIRS[pair.lower()]
        except KeyError:
            raise InputError(f"unknown pair {pair!r}; choose from {', '.join(PAIRS)}") from None
    else:
        kinds = tuple(Kind(p) for p in pair)
    small, large = kinds
    joint = joint_system([aut])
    ps = joint.system
    seeds = list(joint.elements[0])
    width = len(ps)
    witness = None
    if large is Kind.CABA:
        atoms = boolean_atoms(seeds, width)
        if small is Kind.CSL:
            have = set(union_closure(seeds))
            missing = [a for a in atoms if a not in have]
        else:
            solver = gf2.Solver(seeds)
            missing = [a for a in atoms if not solver.spans(a)]
        if missing:
            witness = describe(ps, missing[0])
    else:
        lo = set(family_closure(seeds, width, small))
        hi = family_closure(seeds, width, large)
        extra = sorted(hi - lo)
        if extra:
            witness = describe(ps, extra[0])
    return ClosednessVerdict(aut, kinds, witness is None, witness)


# -- statistics --------------------------------------------------------------

@dataclass(frozen=True)
class ClosureReport:
    states: int
    atoms: int
    csl: int
    cdl: int
    vec: int
    dim: int
    caba: int
    sizes: dict
    """State counts of the five constructions, keyed by construction name."""
    csl_eq_cdl: bool
    csl_eq_caba: bool
    vec_eq_caba: bool

    def as_dict(self) -> dict:
        return {
            "states": self.states, "atoms": self.atoms, "csl": self.csl, "cdl": self.cdl,
            "vec": self.vec, "dim": self.dim, "caba": self.caba, "sizes": dict(self.sizes),
            "flags": {"csl=cdl": self.csl_eq_cdl, "csl=caba": self.csl_eq_caba,
                      "vec=caba": self.vec_eq_caba},
        }


def closure_report(source, alphabet: Sequence[str] | None = None, *,
                   ps: ProfileSystem | None = None) -> ClosureReport:
    if ps is None:
        ps = build_profiles(language_dfa(source, alphabet))
    csl = csl_closure(ps)
    cdl = cdl_closure(ps)
    vec = vec_closure(ps)
    dim = gf2.rank(ps.residuals)
    caba = 1 << len(ps)
    sizes = {
        "rfsa": canonical_rfsa(ps).state_count,
        "atomaton": atomaton(ps).state_count,
        "distromaton": distromaton(ps).state_count,
        "xor": minimal_xor(ps).state_count,
        "xor-caba": minimal_xor_caba(ps).state_count,
    }
    return ClosureReport(
        states=ps.base.state_count, atoms=len(ps), csl=csl.size, cdl=cdl.size,
        vec=vec.size, dim=dim, caba=caba, sizes=sizes,
        csl_eq_cdl=csl.size == cdl.size, csl_eq_caba=csl.size == caba,
        vec_eq_caba=vec.size == caba,
    )


# flag -> (construction, construction) whose sizes must then agree
IMPLICATIONS = {
    "csl=caba": ("rfsa", "atomaton"),
    "csl=cdl": ("rfsa", "distromaton"),
    "vec=caba": ("xor", "xor-caba"),
}


@dataclass
class ComparisonReport:
    checked: int = 0
    flag_counts: dict = field(default_factory=lambda: {f: 0 for f in IMPLICATIONS})
    violations: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return not self.violations


def size_comparison_check(corpus: Iterable, alphabet: Sequence[str] | None = None) -> ComparisonReport:
    """Whenever two closures coincide, the matching canonical automata must
    have the same number of states.  Corpus items are automata, profile
    systems, or ``(regex, alphabet)`` pairs."""
    out = ComparisonReport()
    for item in corpus:
        if isinstance(item, tuple):
            report = closure_report(*item)
        elif isinstance(item, ProfileSystem):
            report = closure_report(None, ps=item)
        else:
            report = closure_report(item, alphabet)
        out.checked += 1
        flags = report.as_dict()["flags"]
        for flag, (left, right) in IMPLICATIONS.items():
            if flags[flag]:
                out.flag_counts[flag] += 1
                if report.sizes[left] != report.sizes[right]:
                    out.violations.append((item, flag, report.sizes[left], report.sizes[right]))
    return out


# -- brute force -------------------------------------------------------------

BRUTE_MAX_STATES = 3
BRUTE_MAX_LETTERS = 2


def _language_table(dfa: Dfa, length: int) -> list[tuple[list[int], int]]:
    """Words up to ``length`` as letter-index lists, each with its expected bit."""
    out = []
    for n in range(length + 1):
        for w in itertools.product(range(len(dfa.alphabet)), repeat=n):
            q = dfa.initial
            for i in w:
                q = dfa.delta[q][i]
            out.append((list(w), int(q in dfa.finals)))
    return out


def brute_force_min_nfa(lang: Dfa, max_states: int, mode: str = "union",
                        constraint: Callable[[Nfa | Xfa], bool] | None = None) -> int | None:
    """Smallest number of states of an automaton of the given mode accepting
    ``lang`` (and satisfying ``constraint``), or ``None`` if there is none
    with at most ``max_states`` states.

    Every automaton is enumerated, so the cost grows as
    ``2^(n * n * |A| + 2n)``; the limits keep it at desk scale.
    """
    if max_states > BRUTE_MAX_STATES or len(lang.alphabet) > BRUTE_MAX_LETTERS:
        raise ResourceLimitError("brute-force search size", BRUTE_MAX_STATES)
    if mode not in ("union", "xor"):
        raise InputError(f"unknown mode {mode!r}")
    cls = Nfa if mode == "union" else Xfa
    k = len(lang.alphabet)
    table = _language_table(lang, 6)
    for n in range(max_states + 1):
        full = 1 << n
        for targets in itertools.product(range(full), repeat=n * k):
            # masks[i][q]
            masks = [[targets[q * k + i] for q in range(n)] for i in range(k)]
            for init in range(full):
                # vectors reached by each test word
                for fin in range(full):
                    if not _agrees(masks, init, fin, table, mode):
                        continue
                    aut = cls(lang.alphabet, n, bits(init), bits(fin),
                              [[bits(masks[i][q]) for i in range(k)] for q in range(n)])
                    if equivalent(aut, lang) and (constraint is None or constraint(aut)):
                        return n
    return None


def _agrees(masks, init, fin, table, mode) -> bool:
    xor = mode == "xor"
    for w, expected in table:
        s = init
        for i in w:
            row = masks[i]
            t = 0
            for q in bits(s):
                t = t ^ row[q] if xor else t | row[q]
            s = t
        hit = s & fin
        got = bin(hit).count("1") & 1 if xor else int(hit != 0)
        if got != expected:
            return False
    return True


def in_closure_constraint(lang: Dfa, kind: Kind | str = Kind.CSL) -> Callable[[Nfa | Xfa], bool]:
    """Constraint: every state language lies in the ``kind`` closure of the
    residuals of ``lang``."""
    kind = Kind(kind)
    lang = lang if lang.minimal else minimize(lang)

    def check(aut) -> bool:
        joint = joint_system([lang, aut])
        ps = joint.system
        residuals, states = joint.elements
        closure = family_closure(list(residuals), len(ps), kind)
        if closure is None:
            atoms = boolean_atoms(list(residuals), len(ps))
            return all(all(a & s in (0, a) for a in atoms) for s in states)
        return all(s in closure for s in states)

    return check
