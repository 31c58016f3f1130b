"""
Transport of the standard action along elementary links and the full synthesis fold.
"""

import logging
from typing import Optional, Tuple

from ga3_bundles.action.candidate import STANDARD_BOUNDARY, ActionCandidate, standard_action
from ga3_bundles.action.verifier import is_pointwise_fixed, verify_all
from ga3_bundles.algebra.groebner import GroebnerLimits, NotProven, ideal_contains_all
from ga3_bundles.algebra.polynomial import COX_VARIABLES, var
from ga3_bundles.errors import (
    LinkContractError,
    LinkPreconditionError,
    SynthesisError,
)
from ga3_bundles.geometry.bundle import FIBER, TRIVIAL, XI, BundleType, class_of_divisor
from ga3_bundles.links.rational_map import link_map
from ga3_bundles.links.transport import multiplicity_along_center, plan_links, transport_class
from ga3_bundles.models.certificate import Certificate
from ga3_bundles.models.links import LinkKind, LinkStep, StepRecord, SynthesisReport

logger = logging.getLogger("ga3-bundles.links")

_MAX_TORUS_EXPONENT = 3


def check_center_stable(step: LinkStep, action: ActionCandidate, limits: Optional[GroebnerLimits] = None) -> None:
    """
    sigma*(g) lies in the center ideal for every center generator g. A point center must
    moreover be a fixed point of the action.
    """
    pulled = [action.pullback(generator) for generator in step.center]
    for generator, image, found in zip(step.center, pulled, ideal_contains_all(pulled, step.center, limits)):
        if isinstance(found, NotProven):
            raise LinkPreconditionError(
                f"The action moves the center of {step}",
                witness=f"{generator} -> {image}",
            )
    if step.kind == LinkKind.POINT and not is_pointwise_fixed(action, step.center, limits):
        raise LinkPreconditionError(
            f"The center of {step} is not shown to be a fixed point of the action",
            witness=", ".join(str(g) for g in step.center),
        )


def check_chart_compatibility(
    step: LinkStep,
    source_action: ActionCandidate,
    target_action: ActionCandidate,
    limits: Optional[GroebnerLimits] = None,
) -> int:
    """
    link . sigma_source = sigma_target . link, coordinatewise up to the torus element t1^k,
    which scales a target coordinate of lambda-weight l by t1^(k*l). Returns k.
    """
    mapping = link_map(step, limits)
    lhs = mapping.apply(source_action.images)
    rhs = tuple(mapping.pullback(image) for image in target_action.images)
    weights = step.target.weights()
    t1 = var("t1")
    for k in range(_MAX_TORUS_EXPONENT + 1):
        factors = [t1 ** (k * weights[name].lambda_weight) for name in COX_VARIABLES]
        if all(l * f == r for l, f, r in zip(lhs, factors, rhs)):
            return k
        if all(l == r * f for l, f, r in zip(lhs, factors, rhs)):
            return -k
    mismatch = next(
        f"{name}: {l} vs {r}" for name, l, r in zip(COX_VARIABLES, lhs, rhs) if l != r
    )
    raise LinkContractError(f"Chart compatibility fails for {step}: {mismatch}")


def _transport(
    step: LinkStep,
    action: ActionCandidate,
    limits: Optional[GroebnerLimits] = None,
) -> Tuple[ActionCandidate, Certificate, int]:
    if action.bundle != step.source:
        raise LinkPreconditionError(f"Action lives on {action.bundle}, link starts at {step.source}")
    check_center_stable(step, action, limits)
    source_certificate = verify_all(action, STANDARD_BOUNDARY, limits=limits)
    failure = source_certificate.first_failure()
    if failure is not None:
        name, verdict = failure
        raise LinkPreconditionError(
            f"Source action is not certified ({name} {verdict.status.value})",
            witness=verdict.witness or verdict.reason,
        )
    target_action = standard_action(step.target)
    target_certificate = verify_all(target_action, STANDARD_BOUNDARY, limits=limits)
    exponent = check_chart_compatibility(step, action, target_action, limits)
    return target_action, target_certificate, exponent


def transport_action(
    step: LinkStep,
    action: ActionCandidate,
    limits: Optional[GroebnerLimits] = None,
) -> ActionCandidate:
    """The action on step.target agreeing with `action` on the common chart."""
    return _transport(step, action, limits)[0]


def synthesize(target: BundleType, limits: Optional[GroebnerLimits] = None) -> SynthesisReport:
    """Fold transport_action over plan_links(target), starting from P^1 x P^2."""
    plan = plan_links(target)
    action = standard_action(BundleType(d1=0, d2=0))
    certificate = verify_all(action, STANDARD_BOUNDARY, limits=limits)
    if not certificate.valid:
        raise SynthesisError("base action on P^1 x P^2 is not certified", 0)

    section_class, fiber_class = XI, FIBER
    section, fiber = STANDARD_BOUNDARY
    records = []
    for index, step in enumerate(plan.steps, 1):
        try:
            action, certificate, exponent = _transport(step, action, limits)
        except (LinkPreconditionError, LinkContractError) as exc:
            raise SynthesisError(str(exc), index, getattr(exc, "witness", None)) from exc

        section_class = transport_class(step, section_class, multiplicity_along_center(step, section, limits))
        fiber_class = transport_class(step, fiber_class, 0)
        contracted = transport_class(step, FIBER, multiplicity_along_center(step, fiber, limits))

        if contracted != TRIVIAL:
            raise SynthesisError(f"fiber through the center lands on {contracted}, not (0,0)", index)
        if (section_class, fiber_class) != (XI, FIBER):
            raise SynthesisError(
                f"boundary classes became ({section_class}, {fiber_class})", index
            )
        if (class_of_divisor(step.target, section), class_of_divisor(step.target, fiber)) != (XI, FIBER):
            raise SynthesisError("boundary equations do not cut (xi, F) on the target", index)
        if not certificate.valid:
            failure = certificate.first_failure()
            raise SynthesisError(f"target certificate invalid at {failure[0] if failure else 'orbit_rank'}", index)

        records.append(
            StepRecord(
                index=index,
                step=step,
                boundary_section=section_class,
                boundary_fiber=fiber_class,
                contracted_fiber=contracted,
                torus_exponent=exponent,
                certificate=certificate,
            )
        )
        logger.info(f"Step {index}: {step} -> {step.target}, torus exponent {exponent}")

    return SynthesisReport(
        target=target,
        plan=plan,
        action=action.images,
        certificate=certificate,
        steps=records,
    )
