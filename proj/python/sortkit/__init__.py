"""Sorting of monomials, vertex cover ideals of whiskered graphs and the
Rees algebras of their powers."""

import json

from ._core import (
    CapExceeded,
    Error,
    Falsification,
    ParseError,
    PreconditionError,
    StructuralError,
    cover_ideal,
    is_proper_interval_labeling,
    is_sortable,
    minimal_vertex_covers,
    reduce_to_sorted,
    run,
    sort_pair,
    sort_tuple,
)
from . import _core


def _as_json(value):
    return value if isinstance(value, str) else json.dumps(value)


def rees_verify(graph, spec, degree=3):
    """Checks the Rees Groebner basis of a whiskered graph; returns the report dict."""
    return json.loads(_core.rees_verify(_as_json(graph), _as_json(spec), degree))


def powers_certify(graph, spec, kmax=3):
    """Linear-quotient certificates for I^1..I^kmax; returns the report dict."""
    return json.loads(_core.powers_certify(_as_json(graph), _as_json(spec), kmax))


__all__ = [
    "CapExceeded",
    "Error",
    "Falsification",
    "ParseError",
    "PreconditionError",
    "StructuralError",
    "cover_ideal",
    "is_proper_interval_labeling",
    "is_sortable",
    "minimal_vertex_covers",
    "powers_certify",
    "reduce_to_sorted",
    "rees_verify",
    "run",
    "sort_pair",
    "sort_tuple",
]
