"""Reporting layer - deterministic JSON and Jinja2 text reports."""

from ga3_bundles.reporting.renderer import ReportRenderer, to_plain

__all__ = ["ReportRenderer", "to_plain"]
