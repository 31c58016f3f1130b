"""Action candidates, the individual checks and the certificate."""

import pytest
from sympy import Matrix

from ga3_bundles.action.candidate import (
    STANDARD_BOUNDARY,
    ActionCandidate,
    BasePoint,
    chart_coordinates,
    conjugate_action,
    default_base_point,
    identity_action,
    parse_base_point,
    standard_action,
)
from ga3_bundles.action.mutants import MUTANTS, build_mutant
from ga3_bundles.action.verifier import (
    compose_with_primed,
    ht_coefficients,
    is_pointwise_fixed,
    orbit_jacobian,
    orbit_rank,
    verify_all,
    verify_boundary_stability,
    verify_equivariance,
    verify_group_law,
    verify_identity,
    verify_irrelevant_locus,
)
from ga3_bundles.algebra.parser import parse
from ga3_bundles.algebra.polynomial import Polynomial, var
from ga3_bundles.errors import (
    BasePointError,
    DegenerateClassSystemError,
    HeterogeneousPolynomialError,
    ZeroPolynomialError,
)
from ga3_bundles.geometry.automorphism import normalize_boundary
from ga3_bundles.geometry.bundle import FIBER, XI, BundleType, DivisorClass
from ga3_bundles.models.certificate import CheckStatus
from tests.conftest import GRID, SMALL_GRID

t1, t2, x1, x2, x3 = (var(n) for n in ("t1", "t2", "x1", "x2", "x3"))
ORIGIN_POINT = BasePoint.of(1, 0, 0, 0, 1)


def test_standard_action_shape():
    action = standard_action(BundleType.of(2, 1))
    assert action.image("x1") == parse("x1 + v*t1^2*x3")
    assert action.image("x2") == parse("x2 + w*t1*x3")
    assert action.image("t2") == parse("t2 + u*t1")


def test_candidate_rejects_primed_parameters():
    with pytest.raises(ValueError):
        ActionCandidate(bundle=BundleType.of(0, 0), images=(t1, t2 + parse("u'*t1"), x1, x2, x3))


# --- identity ---

def test_identity_check():
    bundle = BundleType.of(1, 0)
    assert verify_identity(standard_action(bundle)).ok
    failed = verify_identity(standard_action(bundle).with_image("t2", t2 + t1))
    assert failed.status == CheckStatus.FAIL
    assert "t2" in failed.witness
    assert verify_identity(standard_action(bundle).with_image("t2", t2 + parse("u^2*t1"))).ok


# --- equivariance ---

def test_equivariance_check():
    assert verify_equivariance(standard_action(BundleType.of(3, 2))).ok
    shifted = standard_action(BundleType.of(1, 1)).with_image("x1", x1 + parse("v*x3"))
    failed = verify_equivariance(shifted)
    assert failed.status == CheckStatus.FAIL
    assert "x3*v" in failed.witness
    on_product = standard_action(BundleType.of(0, 0)).with_image("x1", x1 + parse("v*x3"))
    assert verify_equivariance(on_product).ok


def test_zero_image_breaks_equivariance():
    action = identity_action(BundleType.of(0, 0)).with_image("x2", parse("0"))
    assert verify_equivariance(action).status == CheckStatus.FAIL


# --- group law ---

def test_group_law_check():
    assert verify_group_law(standard_action(BundleType.of(2, 2))).ok
    squared = standard_action(BundleType.of(1, 0)).with_image("t2", t2 + parse("u^2*t1"))
    assert verify_group_law(squared).status == CheckStatus.FAIL


def test_composition_adds_parameters():
    composed = compose_with_primed(standard_action(BundleType.of(1, 0)))
    assert composed[1] == parse("t2 + u*t1 + u'*t1")
    assert composed[2] == parse("x1 + v*t1*x3 + v'*t1*x3")


# --- irrelevant locus ---

def test_irrelevant_locus_check():
    assert verify_irrelevant_locus(standard_action(BundleType.of(2, 1))).ok
    assert verify_irrelevant_locus(identity_action(BundleType.of(2, 1))).ok


def test_image_vanishing_on_a_fiber_is_not_certified():
    action = standard_action(BundleType.of(1, 0)).with_image("x3", t1 * x3)
    verdict = verify_irrelevant_locus(action)
    assert verdict.status == CheckStatus.INCONCLUSIVE
    assert "x-images" in verdict.reason


# --- boundary stability ---

def test_boundary_stability_check():
    action = standard_action(BundleType.of(2, 1))
    assert all(v.ok for v in verify_boundary_stability(action, [x3, t1]))
    [moved] = verify_boundary_stability(action, [t2])
    assert moved.status == CheckStatus.FAIL
    assert moved.witness == "t2 -> t1*u + t2"
    assert all(v.ok for v in verify_boundary_stability(identity_action(action.bundle), [t2, x3, t1 * t2]))


def test_heterogeneous_boundary_is_an_error():
    with pytest.raises(HeterogeneousPolynomialError):
        verify_boundary_stability(standard_action(BundleType.of(1, 1)), [t1 * x3 + t2 * x1])


# --- orbit rank ---

@pytest.mark.parametrize("bundle", SMALL_GRID, ids=str)
def test_standard_jacobian_is_the_identity(bundle):
    assert orbit_jacobian(standard_action(bundle), ORIGIN_POINT) == Matrix.eye(3)
    assert orbit_rank(standard_action(bundle), ORIGIN_POINT) == 3


def test_orbit_rank_degenerations():
    bundle = BundleType.of(1, 1)
    assert orbit_rank(standard_action(bundle).with_image("t2", t2), ORIGIN_POINT) == 2
    assert orbit_rank(identity_action(bundle), ORIGIN_POINT) == 0


def test_rank_at_another_chart_point():
    assert orbit_rank(standard_action(BundleType.of(2, 0)), BasePoint.of(2, 3, 1, -1, 5)) == 3


def test_base_point_must_lie_in_the_chart():
    with pytest.raises(BasePointError):
        orbit_rank(standard_action(BundleType.of(0, 0)), BasePoint.of(0, 1, 0, 0, 1))


# --- base points ---

def test_base_point_validation():
    with pytest.raises(BasePointError):
        BasePoint.of(1, 0, 0, 1)
    with pytest.raises(BasePointError):
        BasePoint.of(0, 0, 1, 0, 0)
    with pytest.raises(BasePointError):
        BasePoint.of(1, 0, 0, 0, 0)
    assert str(BasePoint.of(1, 0, 0, 0, 1)) == "(1:0; 0:0:1)"


def test_default_base_point_avoids_the_boundary():
    assert default_base_point() == ORIGIN_POINT
    assert default_base_point([x3, t2, x1]) == BasePoint.of(1, 1, 1, 0, 1)


def test_parse_base_point():
    assert parse_base_point(None) is None
    assert parse_base_point(["1", "1/2", "0", "0", "1"]).coordinate("t2") == parse_base_point(
        ["1", "2/4", "0", "0", "1"]
    ).coordinate("t2")
    with pytest.raises(BasePointError):
        parse_base_point(["1", "x", "0", "0", "1"])


# --- anticanonical coefficients ---

@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_standard_pair_coefficients(bundle):
    assert ht_coefficients(bundle, XI, FIBER) == (3, 2 + bundle.d1 + bundle.d2)


def test_coefficient_examples():
    product = BundleType.of(0, 0)
    assert ht_coefficients(product, XI, FIBER) == (3, 2)
    assert ht_coefficients(product, XI + FIBER, FIBER) == (3, -1)
    assert ht_coefficients(product, DivisorClass.of(2, 0), FIBER) is None
    with pytest.raises(DegenerateClassSystemError):
        ht_coefficients(product, XI, XI * 2)


# --- certificates ---

@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_standard_action_is_certified(bundle):
    certificate = verify_all(standard_action(bundle), STANDARD_BOUNDARY, ORIGIN_POINT)
    assert certificate.valid
    assert certificate.rank == 3
    assert certificate.coefficients == (3, 2 + bundle.d1 + bundle.d2)
    assert certificate.first_failure() is None


def test_moved_fiber_invalidates_the_certificate():
    certificate = verify_all(standard_action(BundleType.of(1, 0)), [x3, t2])
    assert not certificate.valid
    assert certificate.first_failure()[0] == "boundary_stability[2]"


def test_identity_action_is_not_a_structure():
    certificate = verify_all(identity_action(BundleType.of(1, 1)))
    assert not certificate.valid
    assert certificate.rank == 0
    assert certificate.orbit_rank.status == CheckStatus.FAIL


def test_certificate_serializes_to_plain_data():
    data = verify_all(standard_action(BundleType.of(1, 0))).model_dump(mode="json")
    assert data["valid"] is True
    assert data["action"][2] == "t1*x3*v + x1"
    assert data["base_point"] == ["1", "0", "0", "0", "1"]


def _failing_checks(certificate):
    return {
        name.split("[")[0]
        for name, verdict in certificate.verdicts()
        if verdict.status == CheckStatus.FAIL
    }


@pytest.mark.parametrize("bundle", SMALL_GRID, ids=str)
@pytest.mark.parametrize("name", sorted(MUTANTS))
def test_each_mutant_fails_exactly_its_check(name, bundle):
    mutant = build_mutant(name, bundle)
    certificate = verify_all(mutant.action, mutant.boundary)
    assert not certificate.valid
    assert _failing_checks(certificate) == {mutant.rejected_by}


def test_unknown_mutant():
    with pytest.raises(ValueError):
        build_mutant("no-such-mutant", BundleType.of(0, 0))


# --- conjugation and fixed loci ---

def test_conjugated_action_fixes_the_moved_boundary():
    bundle = BundleType.of(0, 0)
    boundary = [x1 + x3, t1]
    h = normalize_boundary(bundle, *boundary)
    conjugated = conjugate_action(standard_action(bundle), h)
    certificate = verify_all(conjugated, boundary)
    assert certificate.valid


def test_conjugating_by_the_identity_changes_nothing():
    bundle = BundleType.of(2, 1)
    h = normalize_boundary(bundle, x3, t1)
    assert conjugate_action(standard_action(bundle), h) == standard_action(bundle)


def test_pointwise_fixed_loci():
    assert is_pointwise_fixed(standard_action(BundleType.of(1, 1)), [t1])
    assert not is_pointwise_fixed(standard_action(BundleType.of(0, 0)), [t1])
    assert not is_pointwise_fixed(standard_action(BundleType.of(1, 1)), [x3])
    assert is_pointwise_fixed(standard_action(BundleType.of(2, 1)), [t1, x2, x3])


def test_wrong_weight_mutant_exists_on_the_trivial_bundle():
    mutant = build_mutant("wrong-weight", BundleType.of(0, 0))
    assert mutant.action.image("x1") == x1 + var("v") * t1 * x3
    verdict = verify_equivariance(mutant.action)
    assert verdict.status == CheckStatus.FAIL
    assert verdict.witness.startswith("x1: term")


def test_zero_boundary_component_is_an_input_error():
    action = standard_action(BundleType.of(1, 0))
    with pytest.raises(ZeroPolynomialError):
        verify_all(action, [x3, parse("0")])
    with pytest.raises(ValueError):
        verify_boundary_stability(action, [parse("0")])


@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_standard_action_is_a_translation_on_the_chart(bundle):
    chart = {"t1": Polynomial.constant(1), "x3": Polynomial.constant(1)}
    u, v, w = (var(n) for n in ("u", "v", "w"))
    coordinates = chart_coordinates(bundle, standard_action(bundle).images)
    translated = [(n.substitute(chart), d.substitute(chart)) for n, d in coordinates]
    one = Polynomial.constant(1)
    assert translated == [(t2 + u, one), (x1 + v, one), (x2 + w, one)]


@pytest.mark.parametrize("bundle", GRID, ids=str)
def test_fixed_loci_of_the_standard_action(bundle):
    action = standard_action(bundle)
    assert is_pointwise_fixed(action, [t1, x3])
    assert not is_pointwise_fixed(action, [x3])
    # the fiber over t1 = 0 is fixed pointwise exactly when d2 >= 1
    assert is_pointwise_fixed(action, [t1]) == (bundle.d2 >= 1)
