"""
Seeded invalid candidates. Each one breaks exactly one check of verify_all.
"""

from typing import Callable, Dict, NamedTuple, Tuple

from ga3_bundles.action.candidate import STANDARD_BOUNDARY, ActionCandidate, standard_action
from ga3_bundles.algebra.polynomial import Polynomial, var
from ga3_bundles.geometry.bundle import BundleType


class Mutant(NamedTuple):
    action: ActionCandidate
    boundary: Tuple[Polynomial, ...]
    rejected_by: str  # name of the check that must fail


def drop_u(bundle: BundleType) -> Mutant:
    """t2 -> t2: the orbit loses a direction."""
    action = standard_action(bundle).with_image("t2", var("t2"))
    return Mutant(action, STANDARD_BOUNDARY, "orbit_rank")


def square_u(bundle: BundleType) -> Mutant:
    """t2 -> t2 + u^2*t1: not additive in u."""
    action = standard_action(bundle).with_image("t2", var("t2") + var("u") ** 2 * var("t1"))
    return Mutant(action, STANDARD_BOUNDARY, "group_law")


def wrong_weight(bundle: BundleType) -> Mutant:
    """x1 -> x1 + v*t1^(d1+1)*x3: one power of t1 too many, so the image is not bihomogeneous."""
    image = var("x1") + var("v") * var("t1") ** (bundle.d1 + 1) * var("x3")
    action = standard_action(bundle).with_image("x1", image)
    return Mutant(action, STANDARD_BOUNDARY, "equivariance")


def parameterless_shift(bundle: BundleType) -> Mutant:
    """t2 -> t2 + t1: moves points even at u = v = w = 0."""
    action = standard_action(bundle).with_image("t2", var("t2") + var("t1"))
    return Mutant(action, STANDARD_BOUNDARY, "identity")


def wrong_boundary(bundle: BundleType) -> Mutant:
    """The standard action with the fiber {t2 = 0}, which it moves."""
    return Mutant(standard_action(bundle), (var("x3"), var("t2")), "boundary_stability")


MUTANTS: Dict[str, Callable[[BundleType], Mutant]] = {
    "drop-u": drop_u,
    "square-u": square_u,
    "wrong-weight": wrong_weight,
    "parameterless-shift": parameterless_shift,
    "wrong-boundary": wrong_boundary,
}


def build_mutant(name: str, bundle: BundleType) -> Mutant:
    if name not in MUTANTS:
        raise ValueError(f"Unknown mutant {name!r}; choose from {', '.join(MUTANTS)}")
    return MUTANTS[name](bundle)
