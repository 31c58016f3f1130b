"""Elementary links, class transport, plans and the synthesis fold."""

import pytest

from ga3_bundles.action.candidate import standard_action
from ga3_bundles.action.mutants import build_mutant
from ga3_bundles.action.verifier import is_pointwise_fixed
from ga3_bundles.algebra.parser import parse
from ga3_bundles.algebra.polynomial import var
from ga3_bundles.errors import (
    HeterogeneousPolynomialError,
    LinkContractError,
    LinkPreconditionError,
    SuspiciousMultiplicityError,
    ZeroPolynomialError,
)
from ga3_bundles.geometry.bundle import FIBER, TRIVIAL, XI, BundleType, DivisorClass, is_effective
from ga3_bundles.links.rational_map import RationalMap, link_map
from ga3_bundles.links.synthesis import (
    check_center_stable,
    check_chart_compatibility,
    synthesize,
    transport_action,
)
from ga3_bundles.links.transport import multiplicity_along_center, plan_links, transport_class
from ga3_bundles.models.links import LinkKind, LinkPlan, LinkStep
from tests.conftest import GRID, SMALL_GRID

t1, t2, x1, x2, x3 = (var(n) for n in ("t1", "t2", "x1", "x2", "x3"))


# --- steps and plans ---

def test_step_constructors():
    line = LinkStep.line(1)
    assert (line.target.d1, line.target.d2) == (2, 2)
    assert line.center == (t1, x3)
    assert str(line) == "Line@B(1,1)"
    point = LinkStep.point(2, 1)
    assert (point.target.d1, point.target.d2) == (3, 1)
    assert point.center == (t1, x2, x3)
    assert str(point) == "Point@B(2,1)"


def test_malformed_steps_are_rejected():
    with pytest.raises(ValueError):
        LinkStep(kind=LinkKind.LINE, source=BundleType.of(2, 1), target=BundleType.of(3, 2), center=(t1, x3))
    with pytest.raises(ValueError):
        LinkStep(kind=LinkKind.POINT, source=BundleType.of(1, 1), target=BundleType.of(2, 2), center=(t1, x2, x3))
    with pytest.raises(ValueError):
        LinkStep(kind=LinkKind.POINT, source=BundleType.of(1, 1), target=BundleType.of(2, 1), center=(t1, x3))


@pytest.mark.parametrize(
    "target, expected",
    [
        ((0, 0), []),
        ((2, 2), ["Line@B(0,0)", "Line@B(1,1)"]),
        ((3, 1), ["Line@B(0,0)", "Point@B(1,1)", "Point@B(2,1)"]),
        ((2, 0), ["Point@B(0,0)", "Point@B(1,0)"]),
    ],
)
def test_plan_examples(target, expected):
    assert [str(step) for step in plan_links(BundleType.of(*target)).steps] == expected


@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_plan_length_is_d1(bundle):
    plan = plan_links(bundle)
    assert len(plan) == bundle.d1
    assert [s.kind for s in plan.steps].count(LinkKind.LINE) == bundle.d2


def test_plan_chain_is_validated():
    with pytest.raises(ValueError):
        LinkPlan(target=BundleType.of(2, 1), steps=[LinkStep.point(0, 0), LinkStep.line(1)])
    with pytest.raises(ValueError):
        LinkPlan(target=BundleType.of(2, 1), steps=[LinkStep.line(0)])


# --- link maps ---

def test_link_map_formulas():
    assert link_map(LinkStep.line(0)).images == (t1, t2, t1 * x1, t1 * x2, x3)
    assert link_map(LinkStep.point(1, 1)).images == (t1, t2, t1 * x1, x2, x3)


@pytest.mark.parametrize("step", [LinkStep.line(0), LinkStep.line(2), LinkStep.point(0, 0), LinkStep.point(3, 1)], ids=str)
def test_link_maps_meet_their_contracts(step):
    mapping = link_map(step)
    mapping.weight_contract()
    mapping.indeterminacy_contract(step.center)
    mapping.chart_contract()


def test_wrong_center_breaks_the_indeterminacy_contract():
    mapping = link_map(LinkStep.point(1, 0))
    with pytest.raises(LinkContractError):
        mapping.indeterminacy_contract((t1, x3))


def test_wrong_weights_break_the_weight_contract():
    mapping = RationalMap(
        source=BundleType.of(1, 1), target=BundleType.of(2, 2), images=(t1, t2, x1, t1 * x2, x3)
    )
    with pytest.raises(LinkContractError):
        mapping.weight_contract()


def test_chart_contract_catches_a_rescaling():
    mapping = RationalMap(
        source=BundleType.of(0, 0), target=BundleType.of(1, 0), images=(t1, t2, 2 * t1 * x1, x2, x3)
    )
    mapping.weight_contract()
    with pytest.raises(LinkContractError):
        mapping.chart_contract()


# --- class transport ---

@pytest.mark.parametrize("step", [LinkStep.line(1), LinkStep.point(2, 1)], ids=str)
def test_transport_class_examples(step):
    assert transport_class(step, XI, 1) == XI
    assert transport_class(step, FIBER, 1) == TRIVIAL
    assert transport_class(step, FIBER, 0) == FIBER


def test_transport_class_bounds():
    step = LinkStep.line(0)
    assert transport_class(step, DivisorClass.of(2, 3), 5) == DivisorClass.of(2, 0)
    with pytest.raises(SuspiciousMultiplicityError):
        transport_class(step, DivisorClass.of(2, 3), 6)
    with pytest.raises(ValueError):
        transport_class(step, XI, -1)


def test_transport_class_is_additive(rng):
    step = LinkStep.point(1, 1)
    for _ in range(50):
        first = DivisorClass.of(rng.randint(0, 4), rng.randint(0, 4))
        second = DivisorClass.of(rng.randint(0, 4), rng.randint(0, 4))
        m1 = rng.randint(0, first.a + first.b)
        m2 = rng.randint(0, second.a + second.b)
        combined = transport_class(step, first + second, m1 + m2)
        assert combined == transport_class(step, first, m1) + transport_class(step, second, m2)


@pytest.mark.parametrize("step", [LinkStep.line(0), LinkStep.line(2), LinkStep.point(2, 1)], ids=str)
def test_transport_keeps_effective_classes_effective(step):
    for a in range(5):
        for b in range(5):
            divisor = DivisorClass.of(a, b)
            assert is_effective(step.source, divisor)
            for m in range(a + b + 1):
                assert is_effective(step.target, transport_class(step, divisor, m))


@pytest.mark.parametrize(
    "text, expected",
    [("x3", 1), ("t1*x3", 2), ("x1", 0), ("t1", 1), ("x3^3", 3), ("t2*x3 + t1*x1", 1)],
)
def test_multiplicity_along_the_line_center(text, expected):
    assert multiplicity_along_center(LinkStep.line(0), parse(text)) == expected


def test_multiplicity_along_the_point_center():
    step = LinkStep.point(1, 0)
    assert multiplicity_along_center(step, x2 * x3) == 2
    assert multiplicity_along_center(step, x1) == 0
    assert multiplicity_along_center(step, t2 * x2) == 1


@pytest.mark.parametrize("step", [LinkStep.line(1), LinkStep.point(1, 0), LinkStep.point(2, 1)], ids=str)
def test_multiplicity_is_additive_on_products(step, rng, random_bihomogeneous):
    for _ in range(5):
        p = random_bihomogeneous(step.source, rng.randint(0, 2), rng.randint(0, 2))
        q = random_bihomogeneous(step.source, rng.randint(0, 2), rng.randint(0, 2))
        expected = multiplicity_along_center(step, p) + multiplicity_along_center(step, q)
        assert multiplicity_along_center(step, p * q) == expected


def test_multiplicity_needs_a_bihomogeneous_polynomial():
    with pytest.raises(ZeroPolynomialError):
        multiplicity_along_center(LinkStep.line(0), parse("0"))
    with pytest.raises(HeterogeneousPolynomialError):
        multiplicity_along_center(LinkStep.line(1), t1 * x3 + t2 * x1)


# --- transporting actions ---

def test_line_step_from_the_product():
    step = LinkStep.line(0)
    assert transport_action(step, standard_action(step.source)) == standard_action(BundleType.of(1, 1))


def test_point_step_after_a_line_step():
    step = LinkStep.point(1, 1)
    assert transport_action(step, standard_action(step.source)) == standard_action(BundleType.of(2, 1))


@pytest.mark.parametrize("step", [LinkStep.line(0), LinkStep.point(1, 1)], ids=str)
def test_standard_actions_agree_on_the_chart(step):
    assert check_chart_compatibility(step, standard_action(step.source), standard_action(step.target)) == 0


def test_center_must_be_fixed():
    step = LinkStep.line(1)
    moved = standard_action(step.source).with_image("x3", x3 + t2 * x1)
    with pytest.raises(LinkPreconditionError) as err:
        check_center_stable(step, moved)
    assert err.value.witness == "x3 -> t2*x1 + x3"


def test_swapped_boundary_action_has_no_fixed_center():
    step = LinkStep.line(1)
    swapped = standard_action(step.source).with_image("t1", t1 + parse("u*t2")).with_image("t2", t2)
    with pytest.raises(LinkPreconditionError) as err:
        transport_action(step, swapped)
    assert err.value.witness.startswith("t1 -> ")


@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_point_centers_are_fixed_along_every_plan(bundle):
    for step in plan_links(bundle).steps:
        if step.kind == LinkKind.POINT:
            assert is_pointwise_fixed(standard_action(step.source), step.center)


def test_point_center_must_be_a_fixed_point():
    step = LinkStep.point(1, 0)
    rescaled = standard_action(step.source).with_image("t2", t2 + parse("u*t2"))
    with pytest.raises(LinkPreconditionError) as err:
        check_center_stable(step, rescaled)
    assert err.value.witness == "t1, x2, x3"


def test_uncertified_action_is_not_transported():
    step = LinkStep.point(1, 0)
    with pytest.raises(LinkPreconditionError):
        transport_action(step, build_mutant("square-u", step.source).action)


def test_action_must_live_on_the_source():
    with pytest.raises(LinkPreconditionError):
        transport_action(LinkStep.line(1), standard_action(BundleType.of(0, 0)))


# --- synthesis ---

def test_synthesis_of_the_product():
    report = synthesize(BundleType.of(0, 0))
    assert report.valid
    assert len(report.plan) == 0
    assert report.steps == []
    assert report.action == standard_action(BundleType.of(0, 0)).images


@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_synthesis_over_the_grid(bundle):
    report = synthesize(bundle)
    assert report.valid
    assert report.action == standard_action(bundle).images
    assert len(report.steps) == bundle.d1
    for record in report.steps:
        assert (record.boundary_section, record.boundary_fiber) == (XI, FIBER)
        assert record.contracted_fiber == TRIVIAL
        assert record.torus_exponent == 0


@pytest.mark.parametrize("bundle", SMALL_GRID, ids=str)
def test_synthesis_records_walk_the_plan(bundle):
    report = synthesize(bundle)
    assert [record.step for record in report.steps] == report.plan.steps
    assert [record.index for record in report.steps] == list(range(1, bundle.d1 + 1))
    if report.steps:
        assert report.steps[-1].certificate.bundle == bundle
