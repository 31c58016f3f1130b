"""
Pydantic models for elementary links, link plans and synthesis reports.
"""

from enum import Enum
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from ga3_bundles.algebra.polynomial import Polynomial, var
from ga3_bundles.errors import MalformedLinkStepError
from ga3_bundles.geometry.bundle import BundleType, DivisorClass
from ga3_bundles.models.certificate import Certificate

LINE_CENTER: Tuple[str, ...] = ("t1", "x3")
POINT_CENTER: Tuple[str, ...] = ("t1", "x2", "x3")


class LinkKind(str, Enum):
    LINE = "line"    # blow up the line {t1 = x3 = 0} in the fiber over infinity
    POINT = "point"  # blow up the point {t1 = x2 = x3 = 0}


class LinkStep(BaseModel):
    """One elementary link F(-d1,-d2,0) -> F(-d1',-d2',0) with its center inside {t1 = 0}."""

    model_config = ConfigDict(frozen=True)

    kind: LinkKind
    source: BundleType
    target: BundleType
    center: Tuple[Polynomial, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "LinkStep":
        d1, d2 = self.source.d1, self.source.d2
        if self.kind == LinkKind.LINE:
            if d1 != d2:
                raise MalformedLinkStepError(f"Line link needs a source of type (d,d), got {self.source}")
            expected_target, expected_center = (d1 + 1, d2 + 1), LINE_CENTER
        else:
            expected_target, expected_center = (d1 + 1, d2), POINT_CENTER
        if (self.target.d1, self.target.d2) != expected_target:
            raise MalformedLinkStepError(
                f"{self.kind.value} link from {self.source} must land on B{expected_target}, got {self.target}"
            )
        if self.center != tuple(var(name) for name in expected_center):
            raise MalformedLinkStepError(
                f"{self.kind.value} link center must be ({', '.join(expected_center)})"
            )
        return self

    @classmethod
    def line(cls, d: int) -> "LinkStep":
        return cls(
            kind=LinkKind.LINE,
            source=BundleType(d1=d, d2=d),
            target=BundleType(d1=d + 1, d2=d + 1),
            center=tuple(var(name) for name in LINE_CENTER),
        )

    @classmethod
    def point(cls, d1: int, d2: int) -> "LinkStep":
        return cls(
            kind=LinkKind.POINT,
            source=BundleType(d1=d1, d2=d2),
            target=BundleType(d1=d1 + 1, d2=d2),
            center=tuple(var(name) for name in POINT_CENTER),
        )

    def __str__(self) -> str:
        return f"{self.kind.value.capitalize()}@{self.source}"


class LinkPlan(BaseModel):
    """Steps from B(0,0) = P^1 x P^2 to `target`: d2 line links, then d1 - d2 point links."""

    target: BundleType
    steps: List[LinkStep]

    @model_validator(mode="after")
    def _check_chain(self) -> "LinkPlan":
        current = BundleType(d1=0, d2=0)
        for step in self.steps:
            if step.source != current:
                raise MalformedLinkStepError(f"Step {step} does not start at {current}")
            current = step.target
        if current != self.target:
            raise MalformedLinkStepError(f"Plan ends at {current}, not at {self.target}")
        kinds = [step.kind for step in self.steps]
        expected = [LinkKind.LINE] * self.target.d2 + [LinkKind.POINT] * (self.target.d1 - self.target.d2)
        if kinds != expected:
            raise MalformedLinkStepError("Plan must use all line links before the point links")
        return self

    def __len__(self) -> int:
        return len(self.steps)


class StepRecord(BaseModel):
    """What one link did to the action and to the boundary classes."""
    index: int
    step: LinkStep
    boundary_section: DivisorClass  # class of the transported {x3 = 0}
    boundary_fiber: DivisorClass    # class of the transported {t1 = 0}
    contracted_fiber: DivisorClass  # image of the fiber through the center, (0,0) when contracted
    torus_exponent: int             # k in the chart identity up to t1^k
    certificate: Certificate


class SynthesisReport(BaseModel):
    """Final action on the target bundle, its certificate and the link history."""
    target: BundleType
    plan: LinkPlan
    action: Tuple[Polynomial, ...]
    certificate: Certificate
    steps: List[StepRecord]

    @computed_field
    @property
    def valid(self) -> bool:
        return self.certificate.valid and all(record.certificate.valid for record in self.steps)
