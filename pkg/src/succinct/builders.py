"""Succinct automata from a closure algebra and a generator.

State ``y`` of the result steps on ``a`` to every generator in
``d(derivative(i(y), a))``; the initial states are ``d(point)`` and the final
states are the generators whose language contains the empty word.  Union
generators give an NFA, xor generators a GF(2)-weighted automaton.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .automata import Dfa, Nfa, Xfa, bits, minimize, to_dfa
from .closures import (
    DEFAULT_CABA_CAP, DEFAULT_CARRIER_CAP, ClosureAlgebra, accepts_empty, atom_name, caba_closure, cdl_closure, csl_closure,
    derivative, describe, vec_closure,
)
from .errors import InputError, NotAGeneratorError, ResourceLimitError
from .generators import (
    XOR, GeneratorSet, atoms_generator, caba_vector_basis, gf2_basis, join_irreducibles,
    prefix_xor_basis, union_generator, validate_generator,
)
from .profiles import ProfileSystem, build_profiles
from .regex import compile_regex

CONSTRUCTIONS = ("rfsa", "atomaton", "distromaton", "xor", "xor-caba")

Source = Union[str, Dfa, Nfa, Xfa]


@dataclass(frozen=True)
class SuccinctAutomaton:
    mode: str
    """``"union"`` or ``"xor"``."""
    automaton: Nfa | Xfa
    construction: str
    generator: GeneratorSet

    @property
    def labels(self) -> tuple[str, ...]:
        return self.automaton.labels or ()

    @property
    def state_count(self) -> int:
        return self.automaton.state_count

    @property
    def system(self) -> ProfileSystem:
        return self.generator.algebra.system

    def accepts(self, word: str) -> bool:
        return self.automaton.accepts(word)


def language_dfa(source: Source, alphabet: Sequence[str] | None = None) -> Dfa:
    """Minimal DFA of a regex (needs ``alphabet``) or of any automaton."""
    if isinstance(source, str):
        if alphabet is None:
            raise InputError("a regex needs an alphabet")
        return compile_regex(source, alphabet)
    if isinstance(source, Dfa):
        return source if source.minimal else minimize(source)
    if isinstance(source, (Nfa, Xfa)):
        return minimize(to_dfa(source))
    raise InputError(f"cannot read a language from {type(source).__name__}")


def _label(ps: ProfileSystem, element: int) -> str:
    if element and element & (element - 1) == 0:
        return atom_name(ps, element.bit_length() - 1)
    return describe(ps, element)


def build_succinct(alg: ClosureAlgebra, gen: GeneratorSet, construction: str = "custom") -> SuccinctAutomaton:
    if gen.algebra.system is not alg.system or gen.algebra.kind is not alg.kind:
        raise InputError("generator belongs to a different algebra")
    ps = alg.system
    k = len(ps.alphabet)
    try:
        failing = validate_generator(gen).failing_element
    except ResourceLimitError:
        # carrier too large to enumerate: check the elements the construction uses
        used = [alg.point, *(derivative(ps, y, i) for y in gen.elements for i in range(k))]
        failing = next((x for x in used if not _recombines(gen, x)), None)
    if failing is not None:
        raise NotAGeneratorError(f"generator law fails at {describe(ps, failing)}")
    delta = []
    for y in gen.elements:
        delta.append([frozenset(bits(gen.decompose(derivative(ps, y, i)))) for i in range(k)])
    initials = bits(gen.decompose(alg.point))
    finals = [j for j, y in enumerate(gen.elements) if accepts_empty(ps, y)]
    labels = tuple(_label(ps, y) for y in gen.elements)
    cls = Xfa if gen.combination == XOR else Nfa
    aut = cls(ps.alphabet, len(gen.elements), initials, finals, delta, labels)
    return SuccinctAutomaton(gen.combination, aut, construction, gen)


def _recombines(gen: GeneratorSet, x: int) -> bool:
    try:
        return gen.combine(gen.decompose(x)) == x
    except NotAGeneratorError:
        return False


def _system(source: Source, alphabet) -> ProfileSystem:
    if isinstance(source, ProfileSystem):
        return source
    return build_profiles(language_dfa(source, alphabet))


def _custom(alg: ClosureAlgebra, custom: Sequence[int] | None) -> GeneratorSet:
    return join_irreducibles(alg) if custom is None else union_generator(alg, custom)


def canonical_rfsa(source: Source, alphabet: Sequence[str] | None = None, *,
                   custom: Sequence[int] | None = None, cap: int = DEFAULT_CARRIER_CAP) -> SuccinctAutomaton:
    alg = csl_closure(_system(source, alphabet), cap)
    return build_succinct(alg, _custom(alg, custom), "rfsa")


def atomaton(source: Source, alphabet: Sequence[str] | None = None, *,
             custom: Sequence[int] | None = None, cap: int = DEFAULT_CABA_CAP) -> SuccinctAutomaton:
    ps = _system(source, alphabet)
    if custom is None:
        gen = atoms_generator(ps, cap)
    else:
        gen = union_generator(caba_closure(ps, cap), custom)
    return build_succinct(gen.algebra, gen, "atomaton")


def distromaton(source: Source, alphabet: Sequence[str] | None = None, *,
                custom: Sequence[int] | None = None, cap: int = DEFAULT_CARRIER_CAP) -> SuccinctAutomaton:
    alg = cdl_closure(_system(source, alphabet), cap)
    return build_succinct(alg, _custom(alg, custom), "distromaton")


def minimal_xor(source: Source, alphabet: Sequence[str] | None = None, *,
                basis: str | Sequence[int] | None = None,
                cap: int = DEFAULT_CARRIER_CAP) -> SuccinctAutomaton:
    """``basis`` is ``None`` (greedy over residuals), ``"paper-fig6"`` (prefix
    xors of residuals) or an explicit list of elements."""
    alg = vec_closure(_system(source, alphabet), cap)
    if basis == "paper-fig6":
        basis = prefix_xor_basis(alg)
    elif isinstance(basis, str):
        raise InputError(f"unknown basis option {basis!r}")
    return build_succinct(alg, gf2_basis(alg, basis), "xor")


def minimal_xor_caba(source: Source, alphabet: Sequence[str] | None = None, *,
                     custom: Sequence[int] | None = None,
                     cap: int = DEFAULT_CABA_CAP) -> SuccinctAutomaton:
    ps = _system(source, alphabet)
    gen = caba_vector_basis(ps, custom, cap)
    return build_succinct(gen.algebra, gen, "xor-caba")


BUILDERS = {
    "rfsa": canonical_rfsa,
    "atomaton": atomaton,
    "distromaton": distromaton,
    "xor": minimal_xor,
    "xor-caba": minimal_xor_caba,
}


def construct(name: str, source: Source, alphabet: Sequence[str] | None = None,
              **options) -> SuccinctAutomaton:
    try:
        builder = BUILDERS[name]
    except KeyError:
        raise InputError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}") from None
    return builder(source, alphabet, **options)

