"""Geometry layer - the bundle F(-d1,-d2,0), its divisor classes and automorphisms."""

from ga3_bundles.geometry.automorphism import CoxAutomorphism, normalize_boundary
from ga3_bundles.geometry.bundle import (
    FIBER,
    XI,
    BundleType,
    DivisorClass,
    canonical_class,
    class_of_divisor,
    generates_effective_cone,
    intersection_number,
    is_effective,
    linear_system_basis,
    normalize_bundle,
    parse_bundle_descriptor,
    parse_divisor_class,
    section_count,
)

__all__ = [
    "FIBER",
    "XI",
    "BundleType",
    "CoxAutomorphism",
    "DivisorClass",
    "canonical_class",
    "class_of_divisor",
    "generates_effective_cone",
    "intersection_number",
    "is_effective",
    "linear_system_basis",
    "normalize_boundary",
    "normalize_bundle",
    "parse_bundle_descriptor",
    "parse_divisor_class",
    "section_count",
]
