"""
Pydantic models for classification queries and their answers.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, model_validator

from ga3_bundles.algebra.polynomial import Polynomial
from ga3_bundles.geometry.bundle import BundleType, DivisorClass
from ga3_bundles.models.certificate import Certificate
from ga3_bundles.models.links import SynthesisReport
from ga3_bundles.models.rules import RULE_CITATIONS, cited_text


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    YES_IN_PRINCIPLE = "yes_in_principle"


class BoundaryComponent(BaseModel):
    """A boundary divisor given either by its equation or only by its class."""
    polynomial: Optional[Polynomial] = None
    divisor_class: Optional[DivisorClass] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "BoundaryComponent":
        if (self.polynomial is None) == (self.divisor_class is None):
            raise ValueError("Give either a polynomial or a divisor class for a boundary component")
        return self


class FibrationDescriptor(BaseModel):
    """Degree form {degree} or bundle form {bundle, two boundary components}."""
    degree: Optional[int] = None
    bundle: Optional[BundleType] = None
    boundary: List[BoundaryComponent] = []

    @model_validator(mode="after")
    def _check_form(self) -> "FibrationDescriptor":
        if self.degree is not None:
            if self.bundle is not None or self.boundary:
                raise ValueError("Degree form takes no bundle or boundary")
            if not 1 <= self.degree <= 9:
                raise ValueError(f"The degree of a del Pezzo fibration is between 1 and 9, got {self.degree}")
        elif self.bundle is None or len(self.boundary) != 2:
            raise ValueError("Bundle form needs a bundle and exactly two boundary components")
        return self

    @property
    def has_polynomial_boundary(self) -> bool:
        return bool(self.boundary) and all(c.polynomial is not None for c in self.boundary)


class BoundaryNormalization(BaseModel):
    """The automorphism moving a user boundary to ({x3 = 0}, {t1 = 0}) and the conjugated action."""
    images: Tuple[Polynomial, ...]
    inverse: Tuple[Polynomial, ...]
    action: Tuple[Polynomial, ...]
    certificate: Certificate


class Decision(BaseModel):
    """Answer of classify. A yes always carries a valid certificate."""
    verdict: Verdict
    rule_id: str
    rule_text: str = ""
    citation: str = ""
    note: Optional[str] = None
    bundle: Optional[BundleType] = None
    boundary_classes: Optional[Tuple[DivisorClass, DivisorClass]] = None
    coefficients: Optional[Tuple[int, int]] = None
    synthesis: Optional[SynthesisReport] = None
    normalization: Optional[BoundaryNormalization] = None

    @model_validator(mode="after")
    def _fill_and_check(self) -> "Decision":
        if not self.rule_text:
            self.rule_text = cited_text(self.rule_id)
        if not self.citation:
            self.citation = RULE_CITATIONS[self.rule_id]
        if self.verdict == Verdict.YES:
            if self.synthesis is None or not self.synthesis.valid:
                raise ValueError("A yes verdict needs a valid certificate")
            if self.normalization is not None and not self.normalization.certificate.valid:
                raise ValueError("A yes verdict needs a valid certificate for the given boundary")
        return self
