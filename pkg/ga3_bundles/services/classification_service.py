"""
Classification service - decides whether a del Pezzo fibration admits a Ga^3-structure.
Keeps main.py thin: descriptors in, Decision out, with certificates attached to every yes.
"""

import logging
from typing import Optional

from ga3_bundles.action.candidate import ActionCandidate, conjugate_action
from ga3_bundles.action.verifier import ht_coefficients, verify_all
from ga3_bundles.algebra.groebner import GroebnerLimits
from ga3_bundles.geometry.automorphism import normalize_boundary
from ga3_bundles.geometry.bundle import FIBER, DivisorClass, class_of_divisor, generates_effective_cone
from ga3_bundles.links.synthesis import synthesize
from ga3_bundles.models.decision import (
    BoundaryComponent,
    BoundaryNormalization,
    Decision,
    FibrationDescriptor,
    Verdict,
)
from ga3_bundles.models.rules import (
    RULE_ANTICANONICAL,
    RULE_BOUNDARY_NOT_FIBER,
    RULE_CONE_NOT_GENERATED,
    RULE_DEGREE_BELOW_EIGHT,
    RULE_DEGREE_EIGHT,
    RULE_DEGREE_NINE,
    RULE_SYNTHESIZED,
)

logger = logging.getLogger("ga3-bundles.classify")


class ClassificationService:
    """Runs the decision procedure; stateless apart from the Groebner caps."""

    def __init__(self, limits: Optional[GroebnerLimits] = None):
        self.limits = limits

    def classify(self, descriptor: FibrationDescriptor) -> Decision:
        if descriptor.degree is not None:
            return self._classify_degree(descriptor.degree)
        return self._classify_bundle(descriptor)

    def _classify_degree(self, degree: int) -> Decision:
        if degree <= 7:
            return Decision(verdict=Verdict.NO, rule_id=RULE_DEGREE_BELOW_EIGHT)
        if degree == 8:
            return Decision(verdict=Verdict.NO, rule_id=RULE_DEGREE_EIGHT)
        return Decision(
            verdict=Verdict.YES_IN_PRINCIPLE,
            rule_id=RULE_DEGREE_NINE,
            note="Pass -b and two boundary components (-p or -c) to get a certificate.",
        )

    def _component_class(self, descriptor: FibrationDescriptor, component: BoundaryComponent) -> DivisorClass:
        if component.polynomial is not None:
            return class_of_divisor(descriptor.bundle, component.polynomial)
        return component.divisor_class

    def _classify_bundle(self, descriptor: FibrationDescriptor) -> Decision:
        bundle = descriptor.bundle
        first, second = (self._component_class(descriptor, c) for c in descriptor.boundary)
        classes = (first, second)
        logger.info(f"Classifying {bundle} with boundary classes ({first}, {second})")

        if second != FIBER:
            return Decision(verdict=Verdict.NO, rule_id=RULE_BOUNDARY_NOT_FIBER, bundle=bundle, boundary_classes=classes)
        if not generates_effective_cone(bundle, first, second):
            return Decision(verdict=Verdict.NO, rule_id=RULE_CONE_NOT_GENERATED, bundle=bundle, boundary_classes=classes)
        coefficients = ht_coefficients(bundle, first, second)
        if coefficients is None or min(coefficients) < 2:
            return Decision(
                verdict=Verdict.NO,
                rule_id=RULE_ANTICANONICAL,
                bundle=bundle,
                boundary_classes=classes,
                coefficients=coefficients,
            )

        report = synthesize(bundle, self.limits)
        normalization = None
        if descriptor.has_polynomial_boundary:
            normalization = self._normalize(descriptor, ActionCandidate(bundle=bundle, images=report.action))

        return Decision(
            verdict=Verdict.YES,
            rule_id=RULE_SYNTHESIZED,
            bundle=bundle,
            boundary_classes=classes,
            coefficients=coefficients,
            synthesis=report,
            normalization=normalization,
        )

    def _normalize(self, descriptor: FibrationDescriptor, action: ActionCandidate) -> BoundaryNormalization:
        """Carry the synthesized action over to the user's own boundary equations."""
        section, fiber = (c.polynomial for c in descriptor.boundary)
        automorphism = normalize_boundary(descriptor.bundle, section, fiber)
        conjugated = conjugate_action(action, automorphism)
        certificate = verify_all(conjugated, [section, fiber], limits=self.limits)
        if not certificate.valid:
            logger.error(f"Conjugated action failed on boundary ({section}, {fiber}): {certificate.first_failure()}")
        return BoundaryNormalization(
            images=automorphism.images,
            inverse=automorphism.inverse,
            action=conjugated.images,
            certificate=certificate,
        )


def classify(descriptor: FibrationDescriptor, limits: Optional[GroebnerLimits] = None) -> Decision:
    return ClassificationService(limits).classify(descriptor)
