"""
Symbolic checks certifying that an action candidate is a Ga^3-structure with a given boundary.

Each check returns a CheckVerdict; verify_all bundles them into a Certificate. group_law runs
only after identity and equivariance pass, orbit_rank only after group_law passes, so a broken
candidate is blamed on the first axiom it breaks.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from ga3_bundles.action.candidate import (
    STANDARD_BOUNDARY,
    ActionCandidate,
    BasePoint,
    chart_coordinates,
    default_base_point,
)
from ga3_bundles.algebra.groebner import (
    CompletedBasis,
    GroebnerLimits,
    Member,
    NotProven,
)
from ga3_bundles.algebra.polynomial import (
    COX_VARIABLES,
    PARAMETERS,
    T_VARIABLES,
    X_VARIABLES,
    DegreeSentinel,
    Polynomial,
    bidegree_of,
    parameter_shift,
    prime_parameters,
    var,
    zero_parameters,
)
from ga3_bundles.config import settings
from ga3_bundles.errors import (
    BasePointError,
    DegenerateClassSystemError,
    GroebnerResourceError,
    HeterogeneousPolynomialError,
    ZeroPolynomialError,
)
from ga3_bundles.geometry.bundle import (
    BundleType,
    DivisorClass,
    canonical_class,
    class_of_divisor,
    restrict_to_fiber,
)
from ga3_bundles.models.certificate import Certificate, CheckVerdict

logger = logging.getLogger("ga3-bundles.verifier")


# --- Action axioms ---

def verify_identity(action: ActionCandidate) -> CheckVerdict:
    """sigma_(0,0,0) must be the identity."""
    offending = []
    for name, image in zip(COX_VARIABLES, action.images):
        at_origin = image.substitute(zero_parameters())
        if at_origin != var(name):
            offending.append(f"{name} -> {at_origin}")
    return CheckVerdict.failed("; ".join(offending)) if offending else CheckVerdict.passed()


def _offending_term(image: Polynomial, action: ActionCandidate, name: str) -> str:
    weights = action.bundle.weights()
    expected = weights[name]
    for monomial, coeff in image.terms():
        term = Polynomial.from_terms({monomial: coeff})
        degree = bidegree_of(term, weights)
        if degree != expected:
            return f"{name}: term {term} has bidegree {degree}, expected {expected}"
    return f"{name}: image is zero"


def verify_equivariance(action: ActionCandidate) -> CheckVerdict:
    """Every image is bihomogeneous of its variable's bidegree, so the family descends."""
    weights = action.bundle.weights()
    for name, image in zip(COX_VARIABLES, action.images):
        degree = bidegree_of(image, weights)
        if degree is DegreeSentinel.ANY or degree != weights[name]:
            return CheckVerdict.failed(_offending_term(image, action, name))
    return CheckVerdict.passed()


def compose_with_primed(action: ActionCandidate) -> Tuple[Polynomial, ...]:
    """sigma_(u',v',w') after sigma_(u,v,w), as pulled-back images."""
    mapping = action.as_mapping()
    return tuple(image.substitute(prime_parameters()).substitute(mapping) for image in action.images)


def verify_group_law(action: ActionCandidate) -> CheckVerdict:
    """sigma_(u',v',w') . sigma_(u,v,w) = sigma_(u+u',v+v',w+w') in all eleven variables."""
    composed = compose_with_primed(action)
    for name, lhs, image in zip(COX_VARIABLES, composed, action.images):
        rhs = image.substitute(parameter_shift())
        if lhs != rhs:
            return CheckVerdict.failed(f"{name}: {lhs - rhs}")
    return CheckVerdict.passed()


def verify_irrelevant_locus(action: ActionCandidate, limits: Optional[GroebnerLimits] = None) -> CheckVerdict:
    """
    sigma must not send points outside the irrelevant locus into it:
    t1, t2 lie in (sigma(t1), sigma(t2)), and for every x_i and t_j some x_i*t_j^k lies in
    (sigma(x1), sigma(x2), sigma(x3)), which gives V(sigma(x)) inside V(x) union V(t).
    """
    try:
        t_basis = CompletedBasis([action.image(name) for name in T_VARIABLES], limits)
        for name in T_VARIABLES:
            found = t_basis.member(var(name))
            if isinstance(found, NotProven):
                return CheckVerdict.inconclusive(
                    f"{name} not shown in the ideal of the t-images (normal form {found.normal_form})"
                )
        x_basis = CompletedBasis([action.image(name) for name in X_VARIABLES], limits)
        for x_name in X_VARIABLES:
            for t_name in T_VARIABLES:
                if not _some_power_member(x_basis, var(x_name), var(t_name)):
                    return CheckVerdict.inconclusive(
                        f"no {x_name}*{t_name}^k with k <= {settings.locus_max_t_power} "
                        f"shown in the ideal of the x-images"
                    )
    except GroebnerResourceError as exc:
        logger.warning(f"Irrelevant-locus check hit a resource cap: {exc}")
        return CheckVerdict.inconclusive(f"resource: {exc}")
    return CheckVerdict.passed()


def _some_power_member(basis: CompletedBasis, x: Polynomial, t: Polynomial) -> bool:
    candidate = x
    for _ in range(settings.locus_max_t_power + 1):
        if isinstance(basis.member(candidate), Member):
            return True
        candidate = candidate * t
    return False


def verify_boundary_stability(action: ActionCandidate, boundary: Sequence[Polynomial]) -> List[CheckVerdict]:
    """sigma*(p) = p on the nose for every boundary component p."""
    weights = action.bundle.weights()
    verdicts = []
    for p in boundary:
        if p.is_zero:
            raise ZeroPolynomialError("A boundary component must be a nonzero polynomial")
        if bidegree_of(p, weights) is None:
            raise HeterogeneousPolynomialError(f"Boundary component {p} is not bihomogeneous on {action.bundle}")
        pulled = action.pullback(p)
        verdicts.append(CheckVerdict.passed() if pulled == p else CheckVerdict.failed(f"{p} -> {pulled}"))
    return verdicts


# --- Dense orbit ---

def _derivative_at_origin(numerator: Polynomial, denominator: Polynomial, parameter: str) -> Fraction:
    origin = {name: 0 for name in PARAMETERS}
    n0, d0 = numerator.evaluate(origin), denominator.evaluate(origin)
    dn = numerator.differentiate(parameter).evaluate(origin)
    dd = denominator.differentiate(parameter).evaluate(origin)
    return (dn * d0 - n0 * dd) / (d0 * d0)


def orbit_jacobian(action: ActionCandidate, base_point: BasePoint) -> Matrix:
    """d(chart coordinates of sigma(p0))/d(u, v, w) at the origin."""
    if not base_point.in_chart:
        raise BasePointError(f"Base point {base_point} is outside the chart t1 != 0, x3 != 0")
    at_point = [image.substitute(base_point.as_assignment()) for image in action.images]
    rows = []
    for numerator, denominator in chart_coordinates(action.bundle, at_point):
        if denominator.substitute(zero_parameters()).is_zero:
            raise BasePointError(f"sigma_0 moves {base_point} out of the chart")
        row = []
        for parameter in PARAMETERS:
            value = _derivative_at_origin(numerator, denominator, parameter)
            row.append(Rational(value.numerator, value.denominator))
        rows.append(row)
    return Matrix(rows)


def orbit_rank(action: ActionCandidate, base_point: BasePoint) -> int:
    """Rank over QQ of the orbit map's differential at p0; 3 means a dense orbit."""
    return int(orbit_jacobian(action, base_point).rank())


# --- Anticanonical coefficients ---

def ht_coefficients(bundle: BundleType, first: DivisorClass, second: DivisorClass) -> Optional[Tuple[int, int]]:
    """Integers (a1, a2) with -K = a1*first + a2*second, or None if the solution is not integral."""
    # first row: restriction to a fiber, where -K becomes O_{P^2}(3)
    system = Matrix([[restrict_to_fiber(first), restrict_to_fiber(second)], [first.b, second.b]])
    if system.det() == 0:
        raise DegenerateClassSystemError(f"Boundary classes {first} and {second} are linearly dependent")
    anticanonical = canonical_class(bundle)
    solution = system.LUsolve(Matrix([restrict_to_fiber(anticanonical), anticanonical.b]))
    if not all(value.is_integer for value in solution):
        return None
    return int(solution[0]), int(solution[1])


def _ht_verdict(bundle: BundleType, boundary: Sequence[Polynomial]) -> Tuple[CheckVerdict, Optional[Tuple[int, int]]]:
    if len(boundary) != 2:
        return CheckVerdict.inconclusive(f"needs exactly two boundary components, got {len(boundary)}"), None
    first, second = (class_of_divisor(bundle, p) for p in boundary)
    try:
        coefficients = ht_coefficients(bundle, first, second)
    except DegenerateClassSystemError as exc:
        return CheckVerdict.failed(str(exc)), None
    if coefficients is None:
        return CheckVerdict.failed(f"-K is not an integral combination of {first} and {second}"), None
    if min(coefficients) < 2:
        return CheckVerdict.failed(f"-K = {coefficients[0]}*D1 + {coefficients[1]}*D2"), coefficients
    return CheckVerdict.passed(), coefficients


# --- Aggregate ---

def verify_all(
    action: ActionCandidate,
    boundary: Sequence[Polynomial] = STANDARD_BOUNDARY,
    base_point: Optional[BasePoint] = None,
    limits: Optional[GroebnerLimits] = None,
) -> Certificate:
    """Run every check and collect the verdicts into a Certificate."""
    boundary = list(boundary)
    if any(p.is_zero for p in boundary):
        raise ZeroPolynomialError("A boundary component must be a nonzero polynomial")
    base_point = base_point or default_base_point(boundary)

    identity = verify_identity(action)
    equivariance = verify_equivariance(action)
    if identity.ok and equivariance.ok:
        group_law = verify_group_law(action)
    else:
        group_law = CheckVerdict.inconclusive("prerequisite: identity and equivariance must pass")
    irrelevant_locus = verify_irrelevant_locus(action, limits)
    stability = verify_boundary_stability(action, boundary)

    rank = None
    if group_law.ok:
        rank = orbit_rank(action, base_point)
        rank_verdict = CheckVerdict.passed() if rank == 3 else CheckVerdict.failed(f"rank {rank} at {base_point}")
    else:
        rank_verdict = CheckVerdict.inconclusive("prerequisite: group_law must pass")

    ht_verdict, coefficients = _ht_verdict(action.bundle, boundary)

    certificate = Certificate(
        bundle=action.bundle,
        action=action.images,
        boundary=boundary,
        base_point=[str(v) for v in base_point.values],
        identity=identity,
        equivariance=equivariance,
        group_law=group_law,
        irrelevant_locus=irrelevant_locus,
        boundary_stability=stability,
        orbit_rank=rank_verdict,
        rank=rank,
        ht_coefficients=ht_verdict,
        coefficients=coefficients,
    )
    logger.info(f"verify_all on {action.bundle}: valid={certificate.valid}")
    return certificate


# --- Fixed loci ---

def _all_members(polys: Sequence[Polynomial], basis: CompletedBasis) -> bool:
    return all(isinstance(basis.member(p), Member) for p in polys)


def is_pointwise_fixed(
    action: ActionCandidate,
    locus: Sequence[Polynomial],
    limits: Optional[GroebnerLimits] = None,
) -> bool:
    """
    Whether sigma fixes every point of V(locus), for all parameter values.

    First tries sigma*(y) - y in the locus ideal for every Cox variable. Otherwise, when the
    t-pair is fixed exactly, compares the x-triples up to the mu-scaling through the 2x2 minors
    x_i*sigma(x_j) - x_j*sigma(x_i).
    """
    basis = CompletedBasis(list(locus), limits)
    t_moves = [action.image(name) - var(name) for name in T_VARIABLES]
    x_moves = [action.image(name) - var(name) for name in X_VARIABLES]
    if not _all_members(t_moves, basis):
        return False
    if _all_members(x_moves, basis):
        return True
    minors = [
        var(a) * action.image(b) - var(b) * action.image(a)
        for i, a in enumerate(X_VARIABLES)
        for b in X_VARIABLES[i + 1:]
    ]
    return _all_members(minors, basis)
