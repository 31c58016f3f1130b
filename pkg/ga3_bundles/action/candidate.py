"""
Action candidates: a family sigma_(u,v,w) of Cox-coordinate endomorphisms, given by the
images of t1, t2, x1, x2, x3 as polynomials in the Cox variables and u, v, w.
"""

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_serializer, field_validator, model_validator

from ga3_bundles.algebra.polynomial import (
    COX_VARIABLES,
    PRIMED_PARAMETERS,
    Polynomial,
    Scalar,
    var,
)
from ga3_bundles.errors import BasePointError
from ga3_bundles.geometry.automorphism import CoxAutomorphism
from ga3_bundles.geometry.bundle import BundleType

STANDARD_BOUNDARY: Tuple[Polynomial, Polynomial] = (var("x3"), var("t1"))


class ActionCandidate(BaseModel):
    """images[i] is sigma*(COX_VARIABLES[i])."""

    model_config = ConfigDict(frozen=True)

    bundle: BundleType
    images: Tuple[Polynomial, Polynomial, Polynomial, Polynomial, Polynomial]

    @model_validator(mode="after")
    def _check_variables(self) -> "ActionCandidate":
        for name, image in zip(COX_VARIABLES, self.images):
            primed = [v for v in image.variables() if v in PRIMED_PARAMETERS]
            if primed:
                raise ValueError(f"Image of {name} uses reserved names {', '.join(primed)}")
        return self

    def as_mapping(self) -> Dict[str, Polynomial]:
        return dict(zip(COX_VARIABLES, self.images))

    def image(self, name: str) -> Polynomial:
        return self.images[COX_VARIABLES.index(name)]

    def with_image(self, name: str, image: Polynomial) -> "ActionCandidate":
        images = list(self.images)
        images[COX_VARIABLES.index(name)] = image
        return ActionCandidate(bundle=self.bundle, images=tuple(images))

    def pullback(self, p: Polynomial) -> Polynomial:
        """sigma*(p): substitute the images for the Cox variables."""
        return p.substitute(self.as_mapping())


class BasePoint(BaseModel):
    """A rational point (t1, t2; x1, x2, x3) of the bundle."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: Tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    @field_validator("values", mode="before")
    @classmethod
    def _to_fractions(cls, values):
        return tuple(Fraction(v) for v in values)

    @field_serializer("values")
    def _dump_values(self, values) -> List[str]:
        return [str(v) for v in values]

    @classmethod
    def of(cls, *values: Scalar) -> "BasePoint":
        if len(values) != 5:
            raise BasePointError(f"A base point has 5 coordinates, got {len(values)}")
        point = cls(values=values)
        if not any(point.values[:2]):
            raise BasePointError("(t1, t2) = (0, 0) lies in the irrelevant locus")
        if not any(point.values[2:]):
            raise BasePointError("(x1, x2, x3) = (0, 0, 0) lies in the irrelevant locus")
        return point

    def as_assignment(self) -> Dict[str, Polynomial]:
        return {name: Polynomial.constant(value) for name, value in zip(COX_VARIABLES, self.values)}

    def coordinate(self, name: str) -> Fraction:
        return self.values[COX_VARIABLES.index(name)]

    @property
    def in_chart(self) -> bool:
        """t1 != 0 and x3 != 0."""
        return self.coordinate("t1") != 0 and self.coordinate("x3") != 0

    def __str__(self) -> str:
        t1, t2, x1, x2, x3 = (str(v) for v in self.values)
        return f"({t1}:{t2}; {x1}:{x2}:{x3})"


def standard_action(bundle: BundleType) -> ActionCandidate:
    """
    t1 -> t1, t2 -> t2 + u*t1, x1 -> x1 + v*t1^d1*x3, x2 -> x2 + w*t1^d2*x3, x3 -> x3.

    On the chart t1 = x3 = 1 this is translation of (t2, x1, x2) by (u, v, w).
    """
    t1, t2, x1, x2, x3 = (var(name) for name in COX_VARIABLES)
    return ActionCandidate(
        bundle=bundle,
        images=(
            t1,
            t2 + var("u") * t1,
            x1 + var("v") * t1 ** bundle.d1 * x3,
            x2 + var("w") * t1 ** bundle.d2 * x3,
            x3,
        ),
    )


def identity_action(bundle: BundleType) -> ActionCandidate:
    return ActionCandidate(bundle=bundle, images=tuple(var(name) for name in COX_VARIABLES))


def chart_coordinates(bundle: BundleType, images: Sequence[Polynomial]) -> List[Tuple[Polynomial, Polynomial]]:
    """
    (numerator, denominator) of the chart coordinates t2/t1, x1/(t1^d1*x3), x2/(t1^d2*x3)
    evaluated on the given 5-tuple. All three are invariant under the (Gm)^2 scaling.
    """
    t1, t2, x1, x2, x3 = images
    return [
        (t2, t1),
        (x1, t1 ** bundle.d1 * x3),
        (x2, t1 ** bundle.d2 * x3),
    ]


def conjugate_action(action: ActionCandidate, automorphism: CoxAutomorphism) -> ActionCandidate:
    """
    h^-1 . sigma . h, whose boundary is the preimage under h of the boundary of sigma.

    Pullbacks compose backwards: tau*(y) = h*(sigma*((h^-1)*(y))).
    """
    mapping = action.as_mapping()
    forward = automorphism.as_mapping()
    images = tuple(back.substitute(mapping).substitute(forward) for back in automorphism.inverse)
    return ActionCandidate(bundle=action.bundle, images=images)


_GRID_VALUES = (0, 1, 2)


def default_base_point(boundary: Sequence[Polynomial] = STANDARD_BOUNDARY) -> BasePoint:
    """First point (1, t2; x1, x2, 1) of a small grid off every boundary component."""
    for t2, x1, x2 in itertools.product(_GRID_VALUES, repeat=3):
        point = BasePoint.of(1, t2, x1, x2, 1)
        assignment = point.as_assignment()
        if all(not p.substitute(assignment).is_zero for p in boundary):
            return point
    raise BasePointError("No grid point in the chart t1 = x3 = 1 avoids the boundary")


def parse_base_point(values: Optional[Sequence[str]]) -> Optional[BasePoint]:
    if values is None:
        return None
    try:
        coordinates = [Fraction(v) for v in values]
    except (ValueError, ZeroDivisionError) as exc:
        raise BasePointError(f"Invalid base point {' '.join(values)}: {exc}") from exc
    return BasePoint.of(*coordinates)
