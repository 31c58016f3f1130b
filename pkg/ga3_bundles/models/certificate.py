"""
Pydantic models for verification reports.
One verdict per check; a certificate is valid only when every verdict passes.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, computed_field

from ga3_bundles.algebra.polynomial import Polynomial
from ga3_bundles.geometry.bundle import BundleType

CHECK_NAMES = (
    "identity",
    "equivariance",
    "group_law",
    "irrelevant_locus",
    "boundary_stability",
    "orbit_rank",
    "ht_coefficients",
)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class CheckVerdict(BaseModel):
    """Outcome of a single check."""
    status: CheckStatus
    witness: Optional[str] = None  # printed polynomial or value when status == fail
    reason: Optional[str] = None   # why the check could not decide

    @classmethod
    def passed(cls) -> "CheckVerdict":
        return cls(status=CheckStatus.PASS)

    @classmethod
    def failed(cls, witness: str) -> "CheckVerdict":
        return cls(status=CheckStatus.FAIL, witness=witness)

    @classmethod
    def inconclusive(cls, reason: str) -> "CheckVerdict":
        return cls(status=CheckStatus.INCONCLUSIVE, reason=reason)

    @property
    def ok(self) -> bool:
        return self.status == CheckStatus.PASS


class Certificate(BaseModel):
    """Everything verify_all found out about an action candidate and its boundary."""
    bundle: BundleType
    action: Tuple[Polynomial, ...]
    boundary: List[Polynomial]
    base_point: List[str]
    identity: CheckVerdict
    equivariance: CheckVerdict
    group_law: CheckVerdict
    irrelevant_locus: CheckVerdict
    boundary_stability: List[CheckVerdict]
    orbit_rank: CheckVerdict
    rank: Optional[int] = None
    ht_coefficients: CheckVerdict
    coefficients: Optional[Tuple[int, int]] = None

    def verdicts(self) -> List[Tuple[str, CheckVerdict]]:
        """(check name, verdict) pairs; boundary components are numbered from 1."""
        found = []
        for name in CHECK_NAMES:
            if name == "boundary_stability":
                found.extend(
                    (f"boundary_stability[{i}]", v) for i, v in enumerate(self.boundary_stability, 1)
                )
            else:
                found.append((name, getattr(self, name)))
        return found

    def first_failure(self) -> Optional[Tuple[str, CheckVerdict]]:
        for name, verdict in self.verdicts():
            if not verdict.ok:
                return name, verdict
        return None

    @computed_field
    @property
    def valid(self) -> bool:
        return (
            all(verdict.ok for _, verdict in self.verdicts())
            and self.rank == 3
            and self.coefficients is not None
            and min(self.coefficients) >= 2
        )
