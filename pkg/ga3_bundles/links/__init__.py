"""Links layer - elementary links, class transport, planning and synthesis."""

from ga3_bundles.links.rational_map import RationalMap, link_map
from ga3_bundles.links.synthesis import (
    check_center_stable,
    check_chart_compatibility,
    synthesize,
    transport_action,
)
from ga3_bundles.links.transport import multiplicity_along_center, plan_links, transport_class

__all__ = [
    "RationalMap",
    "check_center_stable",
    "check_chart_compatibility",
    "link_map",
    "multiplicity_along_center",
    "plan_links",
    "synthesize",
    "transport_action",
    "transport_class",
]
