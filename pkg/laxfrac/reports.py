"""Run reports: one record per check, serialised as JSON or rendered as Markdown."""

import logging
from typing import Any, Dict, List, Literal

from jinja2 import Template
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

Verdict = Literal["pass", "fail", "undetermined", "exhausted"]


class CheckRecord(BaseModel):
    """
    Outcome of one verification over a family of instances.
    """
    name: str = Field(..., description="Check identifier, e.g. vertical_well_defined")
    anchor: str = Field(..., description="The statement this check certifies")
    verdict: Verdict = Field(..., description="pass, fail, undetermined or exhausted")
    instances: int = Field(0, description="Number of instances examined")
    failures: List[str] = Field(default_factory=list, description="Descriptions of failing instances")
    details: Dict[str, Any] = Field(default_factory=dict, description="Check-specific data such as sample sizes")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


class RunReport(BaseModel):
    """
    Model for the report written by a single CLI run.
    """
    command: str = Field(..., description="The command that was executed")
    model: str = Field(..., description="Name of the model the command ran against")
    config: Dict[str, Any] = Field(default_factory=dict, description="Effective bounds, seed and sample size")
    records: List[CheckRecord] = Field(default_factory=list, description="One record per check, in canonical order")
    status: Literal["pass", "fail"] = Field("pass", description="pass iff every record passed")

    def finalize(self) -> "RunReport":
        self.status = "pass" if all(record.passed for record in self.records) else "fail"
        return self


def verdict_of(failures: List[str], undetermined: int = 0, exhausted: int = 0) -> Verdict:
    """Failures dominate exhaustion, which dominates undetermined results."""
    if failures:
        return "fail"
    if exhausted:
        return "exhausted"
    if undetermined:
        return "undetermined"
    return "pass"


MARKDOWN_TEMPLATE = r"""# Verification Report: {{ report.command }} on {{ report.model }}

Status: **{{ report.status }}**

## Configuration

{% for key, value in report.config.items() %}- {{ key }}: {{ value }}
{% endfor %}
## Table of Contents

{% for record in report.records %}- [{{ record.name }}](#{{ record.name }})
{% endfor %}
{% for record in report.records %}<a id='{{ record.name }}'></a>

## {{ record.name }}

{{ record.anchor }}

- Verdict: **{{ record.verdict }}**
- Instances: {{ record.instances }}
{% for key, value in record.details.items() %}- {{ key }}: {{ value }}
{% endfor %}{% if record.failures %}
### Failures

{% for failure in record.failures %}{{ loop.index }}. {{ failure }}
{% endfor %}{% endif %}
---

{% endfor %}"""


def to_json(report: RunReport) -> str:
    return report.model_dump_json(indent=2)


def to_markdown(report: RunReport) -> str:
    """
    Render a report as Markdown.

    Args:
        report: The run report

    Returns:
        Markdown content as string
    """
    return Template(MARKDOWN_TEMPLATE).render(report=report)


def render(report: RunReport, format: Literal["json", "markdown"] = "json") -> str:
    if format == "markdown":
        return to_markdown(report)
    return to_json(report)
