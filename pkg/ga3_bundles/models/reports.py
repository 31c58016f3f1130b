"""
Pydantic models for the smaller CLI reports.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, computed_field

from ga3_bundles.algebra.polynomial import Polynomial
from ga3_bundles.geometry.bundle import BundleType, DivisorClass
from ga3_bundles.models.certificate import Certificate, CheckStatus
from ga3_bundles.models.links import LinkStep


class LinearSystemReport(BaseModel):
    bundle: BundleType
    divisor: DivisorClass
    monomials: List[str]
    section_count: int


class IntersectionReport(BaseModel):
    bundle: BundleType
    classes: Tuple[DivisorClass, DivisorClass, DivisorClass]
    value: int


class LinkReport(BaseModel):
    """A single link: its map, and optionally a multiplicity or a transported class."""
    step: LinkStep
    images: Optional[Tuple[Polynomial, ...]] = None
    polynomial: Optional[Polynomial] = None
    divisor: Optional[DivisorClass] = None
    multiplicity: Optional[int] = None
    transported: Optional[DivisorClass] = None


class MutantReport(BaseModel):
    mutant: str
    rejected_by: str
    certificate: Certificate

    @computed_field
    @property
    def rejected_as_intended(self) -> bool:
        """The only failing check (boundary components counted together) is the intended one."""
        failures = {
            name.split("[")[0]
            for name, verdict in self.certificate.verdicts()
            if verdict.status == CheckStatus.FAIL
        }
        return failures == {self.rejected_by}


class GridRow(BaseModel):
    bundle: BundleType
    valid: bool
    plan_length: int
    error: Optional[str] = None


class GridReport(BaseModel):
    max_d1: int
    rows: List[GridRow]

    @computed_field
    @property
    def all_valid(self) -> bool:
        return all(row.valid for row in self.rows)
