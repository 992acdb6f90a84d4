"""Minimization of deterministic automata with partial transition functions."""

from ._core import (
    AlphabetMismatch,
    ParseError,
    PtDfa,
    UnreachableState,
    ValidationError,
    canonicalize,
    generate,
    hopcroft_minimize,
    is_isomorphic,
    language_equal,
    minimize,
    oracle_minimize,
    parse,
    relevant_states,
    serialize,
)

__all__ = [
    "AlphabetMismatch",
    "ParseError",
    "PtDfa",
    "UnreachableState",
    "ValidationError",
    "canonicalize",
    "generate",
    "hopcroft_minimize",
    "is_isomorphic",
    "language_equal",
    "minimize",
    "oracle_minimize",
    "parse",
    "relevant_states",
    "serialize",
]
