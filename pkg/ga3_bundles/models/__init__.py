"""Models layer - Pydantic schemas for certificates, link plans and decisions."""

from ga3_bundles.models.certificate import Certificate, CheckStatus, CheckVerdict
from ga3_bundles.models.decision import (
    BoundaryComponent,
    BoundaryNormalization,
    Decision,
    FibrationDescriptor,
    Verdict,
)
from ga3_bundles.models.links import LinkKind, LinkPlan, LinkStep, StepRecord, SynthesisReport

__all__ = [
    "BoundaryComponent",
    "BoundaryNormalization",
    "Certificate",
    "CheckStatus",
    "CheckVerdict",
    "Decision",
    "FibrationDescriptor",
    "LinkKind",
    "LinkPlan",
    "LinkStep",
    "StepRecord",
    "SynthesisReport",
    "Verdict",
]
