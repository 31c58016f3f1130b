"""Service layer - classification orchestration."""

from ga3_bundles.services.classification_service import ClassificationService, classify

__all__ = ["ClassificationService", "classify"]
