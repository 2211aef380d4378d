"""Exact hook-difference statistics, cores and q-series identities."""

from ._core import (
    DomainError,
    ParseError,
    carlitz_catalan,
    compose,
    conjecture,
    conjugate,
    departure_words,
    h_stat,
    identities,
    largest_repeated,
    m_core,
    parse,
    partitions,
    quotient,
    rebuild,
    rhs_series,
    verify,
)

__all__ = [
    "DomainError",
    "ParseError",
    "carlitz_catalan",
    "compose",
    "conjecture",
    "conjugate",
    "departure_words",
    "h_stat",
    "identities",
    "largest_repeated",
    "m_core",
    "parse",
    "partitions",
    "quotient",
    "rebuild",
    "rhs_series",
    "verify",
]
