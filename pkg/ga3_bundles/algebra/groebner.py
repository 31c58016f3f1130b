"""
Ideal membership with re-checkable witnesses.

Buchberger's algorithm (normal selection, coprime-leading-monomial criterion) over the
graded-lex ring, tracking for every basis element its expression in the original
generators. A membership answer therefore comes with cofactors g_i such that
p = sum g_i * generators_i, which callers can re-multiply independently.
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field
from sympy.polys.groebnertools import groebner as _sympy_groebner

from ga3_bundles.algebra.polynomial import _RING, MONOMIAL_ORDER, Polynomial
from ga3_bundles.config import settings
from ga3_bundles.errors import GroebnerResourceError

logger = logging.getLogger("ga3-bundles.groebner")


class GroebnerLimits(BaseModel):
    """Caps on the completed basis; exceeding either raises GroebnerResourceError."""

    model_config = ConfigDict(frozen=True)

    max_basis: int = Field(default_factory=lambda: settings.groebner_max_basis)
    max_degree: int = Field(default_factory=lambda: settings.groebner_max_degree)


class Member(BaseModel):
    """p lies in the ideal; cofactors[i] multiplies generators[i]."""

    model_config = ConfigDict(frozen=True)

    cofactors: Tuple[Polynomial, ...]
    generators: Tuple[Polynomial, ...]

    def combination(self) -> Polynomial:
        total = Polynomial()
        for cofactor, generator in zip(self.cofactors, self.generators):
            total = total + cofactor * generator
        return total

    def check(self, p: Polynomial) -> bool:
        """Re-multiply the witness."""
        return self.combination() == p


class NotProven(BaseModel):
    """Nonzero normal form modulo a completed basis: p is not in the ideal."""

    model_config = ConfigDict(frozen=True)

    normal_form: Polynomial


MembershipResult = Union[Member, NotProven]


def _degree(element) -> int:
    return max(sum(m) for m in element)


class CompletedBasis:
    """Groebner basis of an ideal together with each element's cofactor row."""

    def __init__(self, generators: Sequence[Polynomial], limits: Optional[GroebnerLimits] = None):
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        self.limits = limits or GroebnerLimits()
        self._basis: List = []
        self._rows: List[List] = []
        self._complete()

    def __len__(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> Tuple[Polynomial, ...]:
        return tuple(Polynomial(g) for g in self._basis)

    def _append(self, element, row) -> None:
        lc = element.LC
        inverse = _RING.domain.quo(_RING.domain.one, lc)
        self._basis.append(element.mul_ground(inverse))
        self._rows.append([c.mul_ground(inverse) for c in row])
        if len(self._basis) > self.limits.max_basis:
            raise GroebnerResourceError(
                f"Basis grew past {self.limits.max_basis} elements",
                basis_size=len(self._basis),
            )

    def _complete(self) -> None:
        n = len(self.generators)
        for i, generator in enumerate(self.generators):
            element = generator.element
            if not element:
                continue
            row = [_RING.zero] * n
            row[i] = _RING.one
            self._append(element, row)

        lcm = _RING.monomial_lcm
        mul = _RING.monomial_mul
        div = _RING.monomial_div
        pairs = {(i, j) for j in range(len(self._basis)) for i in range(j)}
        while pairs:
            i, j = min(
                pairs,
                key=lambda pr: MONOMIAL_ORDER(lcm(self._basis[pr[0]].LM, self._basis[pr[1]].LM)),
            )
            pairs.discard((i, j))
            lm_i, lm_j = self._basis[i].LM, self._basis[j].LM
            common = lcm(lm_i, lm_j)
            if mul(lm_i, lm_j) == common:
                continue
            shift_i, shift_j = div(common, lm_i), div(common, lm_j)
            spoly = self._basis[i].mul_monom(shift_i) - self._basis[j].mul_monom(shift_j)
            row = [
                a.mul_monom(shift_i) - b.mul_monom(shift_j)
                for a, b in zip(self._rows[i], self._rows[j])
            ]
            remainder, row = self._reduce(spoly, row)
            if not remainder:
                continue
            degree = _degree(remainder)
            if degree > self.limits.max_degree:
                raise GroebnerResourceError(
                    f"S-polynomial remainder of degree {degree} exceeds cap {self.limits.max_degree}",
                    basis_size=len(self._basis),
                    degree=degree,
                )
            new_index = len(self._basis)
            self._append(remainder, row)
            pairs.update((k, new_index) for k in range(new_index))
        logger.debug(f"Completed basis: {len(self.generators)} generators -> {len(self._basis)} elements")

    def _reduce(self, element, row) -> Tuple[object, List]:
        if not element or not self._basis:
            return element, row
        quotients, remainder = element.div(self._basis)
        reduced_row = list(row)
        for q, basis_row in zip(quotients, self._rows):
            if not q:
                continue
            reduced_row = [r - q * c for r, c in zip(reduced_row, basis_row)]
        return remainder, reduced_row

    def normal_form(self, p: Polynomial) -> Polynomial:
        if not self._basis:
            return p
        _, remainder = p.element.div(self._basis)
        return Polynomial(remainder)

    def member(self, p: Polynomial) -> MembershipResult:
        n = len(self.generators)
        row = [_RING.zero] * n
        remainder, row = self._reduce(p.element, row)
        if remainder:
            return NotProven(normal_form=Polynomial(remainder))
        # p - sum(q_l * g_l) = 0 and each g_l = sum(rows[l][k] * f_k); the reduced row
        # holds -sum(q_l * rows[l]), so the witness is its negation.
        return Member(
            cofactors=tuple(Polynomial(-c) for c in row),
            generators=self.generators,
        )


def ideal_member(
    p: Polynomial,
    generators: Sequence[Polynomial],
    limits: Optional[GroebnerLimits] = None,
) -> MembershipResult:
    """Decide p in ideal(generators) over QQ[t, x, u, v, w]; parameters are variables."""
    if p.is_zero:
        return Member(cofactors=tuple(Polynomial() for _ in generators), generators=tuple(generators))
    return CompletedBasis(generators, limits).member(p)


def ideal_contains_all(
    polys: Sequence[Polynomial],
    generators: Sequence[Polynomial],
    limits: Optional[GroebnerLimits] = None,
) -> List[MembershipResult]:
    """Membership of several polynomials against one completed basis."""
    basis = CompletedBasis(generators, limits)
    return [basis.member(p) for p in polys]


def groebner_basis(generators: Sequence[Polynomial]) -> List[Polynomial]:
    """Reduced, monic Groebner basis (graded-lex, t1 < ... < w')."""
    elements = [g.element for g in generators if not g.is_zero]
    if not elements:
        return []
    return [Polynomial(g) for g in _sympy_groebner(elements, _RING)]
