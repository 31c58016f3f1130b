"""Algebra layer - exact polynomials, the text parser and ideal membership."""

from ga3_bundles.algebra.groebner import (
    GroebnerLimits,
    Member,
    NotProven,
    ideal_contains_all,
    ideal_member,
)
from ga3_bundles.algebra.parser import parse
from ga3_bundles.algebra.polynomial import (
    Bidegree,
    Monomial,
    Polynomial,
    bidegree_of,
    differentiate,
    substitute,
)

__all__ = [
    "Bidegree",
    "GroebnerLimits",
    "Member",
    "Monomial",
    "NotProven",
    "Polynomial",
    "bidegree_of",
    "differentiate",
    "ideal_contains_all",
    "ideal_member",
    "parse",
    "substitute",
]
