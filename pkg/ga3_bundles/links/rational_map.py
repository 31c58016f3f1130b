"""
Link maps as direct rational maps between Cox coordinate rings, with the contract each map
is checked against when it is built.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ga3_bundles.action.candidate import chart_coordinates
from ga3_bundles.algebra.groebner import CompletedBasis, GroebnerLimits, Member
from ga3_bundles.algebra.polynomial import (
    COX_VARIABLES,
    T_VARIABLES,
    X_VARIABLES,
    Polynomial,
    bidegree_of,
    var,
)
from ga3_bundles.errors import LinkContractError
from ga3_bundles.geometry.bundle import BundleType
from ga3_bundles.models.links import LinkKind, LinkStep

logger = logging.getLogger("ga3-bundles.links")


class RationalMap(BaseModel):
    """images[i] is the target coordinate COX_VARIABLES[i] as a polynomial in source coordinates."""

    model_config = ConfigDict(frozen=True)

    source: BundleType
    target: BundleType
    images: Tuple[Polynomial, Polynomial, Polynomial, Polynomial, Polynomial]

    def as_mapping(self) -> Dict[str, Polynomial]:
        return dict(zip(COX_VARIABLES, self.images))

    def pullback(self, p: Polynomial) -> Polynomial:
        """A target polynomial written in source coordinates."""
        return p.substitute(self.as_mapping())

    def apply(self, images: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
        """This map after a source endomorphism given by its pulled-back images."""
        mapping = dict(zip(COX_VARIABLES, images))
        return tuple(image.substitute(mapping) for image in self.images)

    def x_images(self) -> List[Polynomial]:
        return [self.images[COX_VARIABLES.index(name)] for name in X_VARIABLES]

    def t_images(self) -> List[Polynomial]:
        return [self.images[COX_VARIABLES.index(name)] for name in T_VARIABLES]

    def indeterminacy_contract(self, center: Sequence[Polynomial], limits: Optional[GroebnerLimits] = None) -> None:
        """
        V(t-images) = V(t), and V(x-images) = V(center) union V(x): every x-image lies in both
        ideals, and every product of a center generator with an x_i lies in ideal(x-images).
        """
        t_basis = CompletedBasis(self.t_images(), limits)
        for name in T_VARIABLES:
            if not isinstance(t_basis.member(var(name)), Member):
                raise LinkContractError(f"{name} is not in the ideal of the t-images of {self}")
        center_basis = CompletedBasis(list(center), limits)
        fiber_basis = CompletedBasis([var(name) for name in X_VARIABLES], limits)
        for image in self.x_images():
            for basis, label in ((center_basis, "center"), (fiber_basis, "irrelevant")):
                if not isinstance(basis.member(image), Member):
                    raise LinkContractError(f"x-image {image} does not vanish on the {label} locus")
        x_basis = CompletedBasis(self.x_images(), limits)
        for generator in center:
            for name in X_VARIABLES:
                product = generator * var(name)
                if not isinstance(x_basis.member(product), Member):
                    raise LinkContractError(f"{product} is not in the ideal of the x-images")

    def weight_contract(self) -> None:
        """Each image has, on the source, the bidegree its variable has on the target."""
        source_weights, target_weights = self.source.weights(), self.target.weights()
        for name, image in zip(COX_VARIABLES, self.images):
            if bidegree_of(image, source_weights) != target_weights[name]:
                raise LinkContractError(
                    f"Image {image} of {name} is not of bidegree {target_weights[name]} on {self.source}"
                )

    def chart_contract(self) -> None:
        """On t1 = x3 = 1 the map is the identity in (t2, x1, x2)."""
        chart = {"t1": Polynomial.constant(1), "x3": Polynomial.constant(1)}
        for (numerator, denominator), name in zip(chart_coordinates(self.target, self.images), ("t2", "x1", "x2")):
            n, d = numerator.substitute(chart), denominator.substitute(chart)
            if n != var(name) * d:
                raise LinkContractError(f"Chart coordinate {n} / {d} is not {name}")

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}: ({', '.join(str(p) for p in self.images)})"


def link_map(step: LinkStep, limits: Optional[GroebnerLimits] = None) -> RationalMap:
    """
    Line: (t1, t2, x1, x2, x3) -> (t1, t2, t1*x1, t1*x2, x3).
    Point: (t1, t2, x1, x2, x3) -> (t1, t2, t1*x1, x2, x3).
    """
    t1, t2, x1, x2, x3 = (var(name) for name in COX_VARIABLES)
    if step.kind == LinkKind.LINE:
        images = (t1, t2, t1 * x1, t1 * x2, x3)
    else:
        images = (t1, t2, t1 * x1, x2, x3)
    mapping = RationalMap(source=step.source, target=step.target, images=images)
    mapping.weight_contract()
    mapping.indeterminacy_contract(step.center, limits)
    mapping.chart_contract()
    logger.debug(f"Built link map {mapping}")
    return mapping
