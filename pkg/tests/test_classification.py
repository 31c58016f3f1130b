"""The decision procedure for del Pezzo fibrations."""

import pytest

from ga3_bundles.algebra.parser import parse
from ga3_bundles.geometry.bundle import FIBER, XI, BundleType, DivisorClass
from ga3_bundles.models.decision import BoundaryComponent, Decision, FibrationDescriptor, Verdict
from ga3_bundles.models.rules import (
    RULE_ANTICANONICAL,
    RULE_BOUNDARY_NOT_FIBER,
    RULE_CONE_NOT_GENERATED,
    RULE_DEGREE_BELOW_EIGHT,
    RULE_DEGREE_EIGHT,
    RULE_DEGREE_NINE,
    RULE_SYNTHESIZED,
    RULE_CITATIONS,
    RULE_TEXTS,
)
from ga3_bundles.services.classification_service import ClassificationService, classify
from tests.conftest import GRID


def by_polynomials(bundle, first, second):
    return FibrationDescriptor(
        bundle=bundle,
        boundary=[BoundaryComponent(polynomial=parse(first)), BoundaryComponent(polynomial=parse(second))],
    )


def by_classes(bundle, first, second):
    return FibrationDescriptor(
        bundle=bundle,
        boundary=[BoundaryComponent(divisor_class=first), BoundaryComponent(divisor_class=second)],
    )


@pytest.mark.parametrize("degree", range(1, 8))
def test_low_degrees_are_excluded(degree):
    decision = classify(FibrationDescriptor(degree=degree))
    assert decision.verdict == Verdict.NO
    assert decision.rule_id == RULE_DEGREE_BELOW_EIGHT
    assert decision.citation == r"It holds that $d \geq 8$"
    assert decision.rule_text.startswith(RULE_TEXTS[RULE_DEGREE_BELOW_EIGHT])
    assert decision.citation in decision.rule_text


def test_degree_eight_is_excluded():
    decision = classify(FibrationDescriptor(degree=8))
    assert decision.verdict == Verdict.NO
    assert decision.rule_id == RULE_DEGREE_EIGHT
    assert decision.citation == r"It holds that $d \neq 8$"
    assert decision.citation in decision.rule_text


def test_degree_nine_asks_for_the_bundle():
    decision = classify(FibrationDescriptor(degree=9))
    assert decision.verdict == Verdict.YES_IN_PRINCIPLE
    assert decision.rule_id == RULE_DEGREE_NINE
    assert decision.synthesis is None


@pytest.mark.parametrize(
    "kwargs",
    [
        {"degree": 0},
        {"degree": 10},
        {"degree": 9, "bundle": BundleType.of(0, 0)},
        {"bundle": BundleType.of(0, 0)},
        {"bundle": BundleType.of(0, 0), "boundary": [BoundaryComponent(divisor_class=XI)]},
        {},
    ],
)
def test_malformed_descriptors(kwargs):
    with pytest.raises(ValueError):
        FibrationDescriptor(**kwargs)


def test_boundary_component_needs_exactly_one_form():
    with pytest.raises(ValueError):
        BoundaryComponent()
    with pytest.raises(ValueError):
        BoundaryComponent(polynomial=parse("x3"), divisor_class=XI)


def test_standard_boundary_on_two_one():
    decision = classify(by_polynomials(BundleType.of(2, 1), "x3", "t1"))
    assert decision.verdict == Verdict.YES
    assert decision.rule_id == RULE_SYNTHESIZED
    assert decision.synthesis.valid
    assert len(decision.synthesis.plan) == 2
    assert decision.coefficients == (3, 5)
    assert decision.normalization.certificate.valid


def test_class_form_gives_a_yes_without_normalization():
    decision = classify(by_classes(BundleType.of(1, 0), XI, FIBER))
    assert decision.verdict == Verdict.YES
    assert decision.normalization is None
    assert decision.boundary_classes == (XI, FIBER)


def test_non_generating_pair():
    decision = classify(by_classes(BundleType.of(0, 0), DivisorClass.of(1, 1), FIBER))
    assert decision.verdict == Verdict.NO
    assert decision.rule_id == RULE_CONE_NOT_GENERATED


def test_second_component_must_be_a_fiber():
    decision = classify(by_classes(BundleType.of(1, 1), FIBER, XI))
    assert decision.verdict == Verdict.NO
    assert decision.rule_id == RULE_BOUNDARY_NOT_FIBER


def test_section_of_the_wrong_class():
    decision = classify(by_polynomials(BundleType.of(1, 0), "t1*x3", "t1"))
    assert decision.verdict == Verdict.NO
    assert decision.rule_id == RULE_CONE_NOT_GENERATED
    assert decision.boundary_classes == (DivisorClass.of(1, 1), FIBER)


def test_moved_boundary_is_normalized_and_certified():
    decision = classify(by_polynomials(BundleType.of(0, 0), "x1 + x3", "t1 + 2*t2"))
    assert decision.verdict == Verdict.YES
    normalization = decision.normalization
    assert normalization.certificate.valid
    assert [str(p) for p in normalization.certificate.boundary] == ["x3 + x1", "2*t2 + t1"]


def test_boundary_at_infinity_on_a_twisted_bundle():
    decision = ClassificationService().classify(by_polynomials(BundleType.of(2, 1), "2*x3", "t2"))
    assert decision.verdict == Verdict.YES
    assert decision.normalization.certificate.valid


def test_yes_requires_a_certificate():
    with pytest.raises(ValueError):
        Decision(verdict=Verdict.YES, rule_id=RULE_SYNTHESIZED)


def test_anticanonical_rule_text_is_available():
    decision = Decision(verdict=Verdict.NO, rule_id=RULE_ANTICANONICAL, coefficients=(3, -1))
    assert "at least 2" in decision.rule_text


@pytest.mark.parametrize("rule_id", sorted(RULE_TEXTS))
def test_every_rule_carries_its_citation(rule_id):
    assert RULE_CITATIONS[rule_id]
    decision = Decision(verdict=Verdict.NO, rule_id=rule_id)
    assert decision.citation == RULE_CITATIONS[rule_id]
    assert f'"{RULE_CITATIONS[rule_id]}"' in decision.rule_text


@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_standard_boundary_is_yes_on_the_grid(bundle):
    decision = classify(by_polynomials(bundle, "x3", "t1"))
    assert decision.verdict == Verdict.YES
    assert decision.synthesis.valid
    assert decision.normalization.certificate.valid
    assert decision.coefficients == (3, 2 + bundle.d1 + bundle.d2)
    assert len(decision.synthesis.plan) == bundle.d1
