"""Generators and bases of closure algebras.

A generator is a list ``Y`` of carrier elements together with a
decomposition ``d`` sending each carrier element to a formal combination of
``Y`` (a bitmask over positions in ``Y``) that evaluates back to it, by union
or by symmetric difference.  It is a basis when the decomposition is also the
only one, i.e. evaluation is injective on formal combinations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import gf2
from .automata import bits
from .closures import DEFAULT_CABA_CAP, ClosureAlgebra, Kind, caba_closure
from .errors import InputError, NotAGeneratorError
from .profiles import ProfileSystem

UNION = "union"
XOR = "xor"


@dataclass(frozen=True)
class GeneratorSet:
    algebra: ClosureAlgebra
    elements: tuple[int, ...]
    combination: str
    is_basis: bool
    decomposer: Callable[[int], int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def decompose(self, element: int) -> int:
        return self.decomposer(element)

    def combine(self, combo: int) -> int:
        if self.combination == XOR:
            return gf2.combine(self.elements, combo)
        out = 0
        for j in bits(combo):
            out |= self.elements[j]
        return out


BASIS_CHECK_LIMIT = 20
"""Largest generator for which the basis law is checked exhaustively."""


@dataclass(frozen=True)
class GeneratorReport:
    generator_law: bool
    basis_law: bool | None
    """``None`` when not checked (generator law failed, or too many elements)."""
    failing_element: int | None = None
    failing_combination: int | None = None
    """A formal combination not recovered by ``decompose(combine(...))``."""
    rank: int | None = None
    """GF(2) rank of the elements, for xor generators."""

    def __bool__(self) -> bool:
        return self.generator_law


def _below(elements: Sequence[int]) -> Callable[[int], int]:
    def decompose(x: int) -> int:
        combo = 0
        for j, y in enumerate(elements):
            if y & ~x == 0:
                combo |= 1 << j
        return combo
    return decompose


def join_irreducibles(alg: ClosureAlgebra) -> GeneratorSet:
    """Join-irreducible elements of a CSL or CDL carrier, in carrier order,
    with ``d(x)`` = all join-irreducibles below ``x``."""
    if alg.kind not in (Kind.CSL, Kind.CDL):
        raise InputError(f"join-irreducibles need a lattice carrier, not {alg.kind.value}")
    carrier = alg.carrier
    # join-irreducibles lie in every join-dense subset, so scanning one suffices
    dense = set(alg.join_dense) if alg.join_dense is not None else set(carrier)
    candidates = [x for x in carrier if x in dense and x]
    ji = []
    for x in candidates:
        join = 0
        for y in candidates:
            if y != x and y & ~x == 0:
                join |= y
        if join != x:
            ji.append(x)
    # a generator is a basis iff evaluation is a bijection onto the carrier
    return GeneratorSet(alg, tuple(ji), UNION, len(carrier) == 1 << len(ji), _below(ji))


def atoms_generator(ps: ProfileSystem, cap: int = DEFAULT_CABA_CAP) -> GeneratorSet:
    """Atoms of the Boolean closure, which is the powerset of the profiles."""
    atoms = tuple(1 << k for k in range(len(ps)))
    return GeneratorSet(caba_closure(ps, cap), atoms, UNION, True, lambda x: x)


def union_generator(alg: ClosureAlgebra, elements: Sequence[int]) -> GeneratorSet:
    """A custom union generator with ``d(x)`` = the given elements below ``x``.

    It is a basis iff distinct subsets have distinct unions, all of which lie
    in the carrier.
    """
    elements = tuple(elements)
    for x in elements:
        if x not in alg:
            raise NotAGeneratorError(f"element {x:#b} is not in the {alg.kind.value} carrier")
    unions = set()
    for combo in range(1 << len(elements)) if len(elements) <= 16 else ():
        out = 0
        for j in bits(combo):
            out |= elements[j]
        unions.add(out)
    basis = len(unions) == 1 << len(elements) and all(u in alg for u in unions)
    return GeneratorSet(alg, elements, UNION, basis, _below(elements))


def _xor_generator(alg: ClosureAlgebra, elements: Sequence[int]) -> GeneratorSet:
    solver = gf2.Solver(elements)

    def decompose(x: int) -> int:
        combo = solver.solve(x)
        if combo is None:
            raise NotAGeneratorError(f"element {x:#b} is outside the span of the generator")
        return combo

    return GeneratorSet(alg, tuple(elements), XOR, solver.independent, decompose)


def gf2_basis(alg: ClosureAlgebra, custom: Sequence[int] | None = None) -> GeneratorSet:
    """Basis of the span of the residuals.

    By default the residuals are scanned in state order and each one that is
    independent of those already taken is kept.  ``custom`` must be a basis
    of the same space.
    """
    if alg.kind is not Kind.VEC:
        raise InputError(f"gf2_basis needs a VEC algebra, not {alg.kind.value}")
    if custom is None:
        chosen: list[int] = []
        for r in alg.residuals:
            if gf2.rank([*chosen, r]) > len(chosen):
                chosen.append(r)
        return _xor_generator(alg, chosen)
    custom = list(custom)
    for x in custom:
        if x not in alg:
            raise NotAGeneratorError(f"element {x:#b} is not in the span of the residuals")
    solver = gf2.Solver(custom)
    target = gf2.rank(alg.residuals)
    if solver.rank != target:
        raise NotAGeneratorError(
            f"custom elements span dimension {solver.rank}, the space has dimension {target}"
        )
    return _xor_generator(alg, custom)


def prefix_xor_basis(alg: ClosureAlgebra) -> list[int]:
    """Basis taken from the running xors ``r_0, r_0+r_1, r_0+r_1+r_2, ...``
    of the residuals in state order, keeping independent ones."""
    chosen: list[int] = []
    acc = 0
    for r in alg.residuals:
        acc ^= r
        if gf2.rank([*chosen, acc]) > len(chosen):
            chosen.append(acc)
    return chosen


def caba_vector_basis(ps: ProfileSystem, custom: Sequence[int] | None = None,
                      cap: int = DEFAULT_CABA_CAP) -> GeneratorSet:
    """Generator of the full powerset of the profiles seen as a GF(2) space.

    The default is the singleton basis.  A custom list must span the whole
    space; it is reported as a basis only if it is also independent.
    """
    alg = caba_closure(ps, cap)
    if custom is None:
        return _xor_generator(alg, [1 << k for k in range(len(ps))])
    custom = list(custom)
    for x in custom:
        if x & ~ps.full:
            raise InputError(f"element {x:#b} mentions profiles outside the system")
    solver = gf2.Solver(custom)
    if solver.rank != len(ps):
        raise NotAGeneratorError(
            f"not a generator of the CABA: rank {solver.rank} < {len(ps)} profiles"
        )
    return _xor_generator(alg, custom)


def validate_generator(gen: GeneratorSet) -> GeneratorReport:
    """Check the generator law on every carrier element, then the basis law
    on every formal combination.  A set that claims to be a basis but fails
    the basis law shows up as ``basis_law=False``."""
    carrier = gen.algebra.carrier
    rank = gf2.rank(gen.elements) if gen.combination == XOR else None
    for x in carrier:
        try:
            combo = gen.decompose(x)
        except NotAGeneratorError:
            return GeneratorReport(False, None, failing_element=x, rank=rank)
        if gen.combine(combo) != x:
            return GeneratorReport(False, None, failing_element=x, rank=rank)
    if len(gen.elements) > BASIS_CHECK_LIMIT:
        return GeneratorReport(True, None, rank=rank)
    for combo in range(1 << len(gen.elements)):
        x = gen.combine(combo)
        if x not in gen.algebra or gen.decompose(x) != combo:
            return GeneratorReport(True, False, failing_combination=combo, rank=rank)
    return GeneratorReport(True, True, rank=rank)


def dependency(gen: GeneratorSet) -> int | None:
    """A nonzero formal combination evaluating to zero, for dependent xor
    generators; ``None`` otherwise."""
    if gen.combination != XOR:
        return None
    deps = gf2.Solver(gen.elements).dependencies
    return deps[0] if deps else None
