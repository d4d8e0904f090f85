"""Canonical succinct automata for regular languages.

The minimal DFA of a language is turned into four closure algebras over its
atoms (unions, lattices, Boolean algebras, GF(2) spans).  A generator of such
an algebra yields a nondeterministic or xor-weighted automaton; the canonical
choices give the canonical residual automaton, the atomaton, the
distromaton, the minimal xor automaton and the minimal xor-CABA automaton.
"""

from .automata import (
    Dfa, Nfa, Xfa, as_nfa, as_xfa, canonical, determinize_union, determinize_xor, equivalent,
    find_counterexample, isomorphic, minimize, to_dfa,
)
from .builders import (
    CONSTRUCTIONS, SuccinctAutomaton, atomaton, build_succinct, canonical_rfsa, construct,
    distromaton, language_dfa, minimal_xor, minimal_xor_caba,
)
from .closures import (
    ClosureAlgebra, Kind, caba_closure, cdl_closure, closure, closure_dfa, csl_closure,
    derivative, vec_closure,
)
from .errors import (
    AutomatonError, InputError, NotAGeneratorError, RegexSyntaxError, ResourceLimitError,
)
from .generators import (
    GeneratorSet, atoms_generator, caba_vector_basis, gf2_basis, join_irreducibles,
    validate_generator,
)
from .profiles import ProfileSystem, build_profiles, profile_of
from .regex import compile_regex, parse_regex
from .analysis import (
    brute_force_min_nfa, closedness_check, closure_report, size_comparison_check,
    state_languages,
)

__version__ = "0.1.0"
