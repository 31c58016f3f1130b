"""
Report rendering: deterministic JSON for machines, Jinja2 text for people.
Stateless apart from the loaded template environment.
"""

import json
import logging
from pathlib import Path
from typing import Any, Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined, TemplateNotFound, select_autoescape
from pydantic import BaseModel

from ga3_bundles.config import settings

logger = logging.getLogger("ga3-bundles.reporting")

# Template directory
TEMPLATE_DIR = Path(__file__).parent / "templates"

# Initialize Jinja2 environment (text reports, so only .html would be escaped)
jinja_env = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    autoescape=select_autoescape(["html"]),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=StrictUndefined,
)


def _bundle(data: dict) -> str:
    return f"B({data['d1']},{data['d2']})"


def _divisor(data: dict) -> str:
    a, b = data["a"], data["b"]
    return f"{a}*xi + {b}*f" if b >= 0 else f"{a}*xi - {-b}*f"


jinja_env.filters["bundle"] = _bundle
jinja_env.filters["divisor"] = _divisor


def to_plain(payload: Any) -> Any:
    """JSON-ready data for a model, a list of models, or plain values."""
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json")
    if isinstance(payload, (list, tuple)):
        return [to_plain(item) for item in payload]
    if isinstance(payload, dict):
        return {key: to_plain(value) for key, value in payload.items()}
    return payload


class ReportRenderer:
    """Turns report models into stdout text."""

    TEMPLATE_MAP = {
        "decision": "decision.txt.j2",
        "certificate": "certificate.txt.j2",
        "synthesis": "synthesis.txt.j2",
        "plan": "plan.txt.j2",
        "linsys": "linsys.txt.j2",
        "intersect": "intersect.txt.j2",
        "link": "link.txt.j2",
        "grid": "grid.txt.j2",
    }

    def __init__(self, indent: Optional[int] = None):
        self.env = jinja_env
        self.indent = settings.json_indent if indent is None else indent

    def to_json(self, payload: Any) -> str:
        """Sorted keys and a fixed indent, so equal reports are byte-identical."""
        return json.dumps(to_plain(payload), sort_keys=True, indent=self.indent) + "\n"

    def render_text(self, report_type: str, payload: Any) -> str:
        template_file = self.TEMPLATE_MAP.get(report_type)
        if not template_file:
            raise ValueError(f"Invalid report type: {report_type}")
        try:
            template = self.env.get_template(template_file)
        except TemplateNotFound as e:
            logger.error(f"Template not found: {e}")
            raise ValueError(f"Template file not found: {template_file}") from e
        return template.render(report=to_plain(payload))

    def render(self, report_type: str, payload: Any, as_text: bool = False) -> str:
        return self.render_text(report_type, payload) if as_text else self.to_json(payload)
