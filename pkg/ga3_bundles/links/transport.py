"""
Divisor-class bookkeeping along a link and the canonical plan from P^1 x P^2.
"""

import itertools
from typing import List, Optional

from ga3_bundles.algebra.groebner import GroebnerLimits, Member, ideal_member
from ga3_bundles.algebra.polynomial import Polynomial, bidegree_of
from ga3_bundles.errors import HeterogeneousPolynomialError, SuspiciousMultiplicityError, ZeroPolynomialError
from ga3_bundles.geometry.bundle import BundleType, DivisorClass
from ga3_bundles.models.links import LinkPlan, LinkStep


def transport_class(step: LinkStep, divisor: DivisorClass, multiplicity: int) -> DivisorClass:
    """
    Strict transform (a, b) -> (a, a + b - m) of a divisor with multiplicity m along the center.

    The total transform is (a, a + b); each order of vanishing along the center removes one
    copy of the exceptional divisor, whose image on the target is a fiber. The fiber through
    the center (a, b, m) = (0, 1, 1) is contracted and lands on (0, 0).
    """
    if multiplicity < 0:
        raise ValueError(f"Multiplicity must be non-negative, got {multiplicity}")
    if multiplicity > divisor.a + divisor.b:
        raise SuspiciousMultiplicityError(
            f"Multiplicity {multiplicity} exceeds a + b = {divisor.a + divisor.b} for {divisor} ({step})"
        )
    return DivisorClass(a=divisor.a, b=divisor.a + divisor.b - multiplicity)


def _center_power(step: LinkStep, k: int) -> List[Polynomial]:
    generators = []
    for combo in itertools.combinations_with_replacement(step.center, k):
        product = Polynomial.constant(1)
        for g in combo:
            product = product * g
        generators.append(product)
    return generators


def multiplicity_along_center(
    step: LinkStep,
    p: Polynomial,
    limits: Optional[GroebnerLimits] = None,
) -> int:
    """Largest k with p in (center)^k."""
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no multiplicity")
    if bidegree_of(p, step.source.weights()) is None:
        raise HeterogeneousPolynomialError(f"{p} is not bihomogeneous on {step.source}")
    k = 0
    while k <= p.total_degree():
        if not isinstance(ideal_member(p, _center_power(step, k + 1), limits), Member):
            return k
        k += 1
    return k


def plan_links(target: BundleType) -> LinkPlan:
    """d2 line links (0,0) -> (d2,d2), then d1 - d2 point links to (d1,d2)."""
    steps = [LinkStep.line(d) for d in range(target.d2)]
    steps += [LinkStep.point(d1, target.d2) for d1 in range(target.d2, target.d1)]
    return LinkPlan(target=target, steps=steps)
