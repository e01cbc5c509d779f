"""Nilpotent Minimum logic: formulas, free algebras and valuations."""

from ._core import (
    AssignmentSpace,
    FreeAlgebra,
    ParseError,
    ResourceError,
    SemanticError,
    Variant,
    count_models,
    desugar,
    enumerate_models,
    eval_chain,
    eval_standard,
    format,
    generic_chain_size,
    parse,
    variables,
)

__all__ = [
    "AssignmentSpace",
    "FreeAlgebra",
    "ParseError",
    "ResourceError",
    "SemanticError",
    "Variant",
    "count_models",
    "desugar",
    "enumerate_models",
    "eval_chain",
    "eval_standard",
    "format",
    "generic_chain_size",
    "parse",
    "variables",
]
