"""
Certification configuration, results and report rendering.

These are the serialized boundary types of the library: the sampling
configuration read from the command line, one result per (check, kappa)
pair, and the report that aggregates them. Floats in JSON output carry 17
significant digits; non-finite values are written as null.
"""

from __future__ import annotations

import enum
import json
import logging
import math
from typing import Any, List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

logger = logging.getLogger(__name__)

# Tolerance tiers, as multiples of SamplingConfig.tolerance.
ANALYTIC = 1.0
FINITE_DIFFERENCE = 1e3
LATTICE_SUM = 1e4


class SamplingConfig(BaseModel):
    """Inputs of one certification run."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(20240917, ge=0, lt=2**64)
    samples_per_check: int = Field(200, gt=0)
    pole_exclusion_radius: float = Field(0.05, gt=0.0, lt=0.25)
    tolerance: float = Field(1e-8, gt=0.0)
    kappa_list: List[float] = Field(default_factory=lambda: [0.3, 0.5, 0.8], min_length=1)
    workers: int = Field(1, ge=1)

    @field_validator("tolerance")
    @classmethod
    def _finite_tolerance(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError(f"tolerance must be finite, got {value!r}")
        return value

    @field_validator("kappa_list")
    @classmethod
    def _kappas_in_open_interval(cls, value: List[float]) -> List[float]:
        for kappa in value:
            if not (math.isfinite(kappa) and 0.0 < kappa < 1.0):
                raise ValueError(f"kappa must lie in the open interval (0, 1), got {kappa!r}")
        return value

    def tier_tolerance(self, scale: float) -> float:
        return self.tolerance * scale


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    check_id: str
    description: str
    kappa: float
    samples: int = Field(ge=0)
    max_abs_residual: float
    tolerance: float
    passed: bool = Field(alias="pass")

    @model_validator(mode="after")
    def _pass_matches_residual(self) -> "CheckResult":
        if self.passed != (self.max_abs_residual <= self.tolerance):
            raise ValueError(
                f"{self.check_id}: pass={self.passed} contradicts residual "
                f"{self.max_abs_residual!r} against tolerance {self.tolerance!r}"
            )
        return self

    @classmethod
    def judge(
        cls, check_id: str, description: str, kappa: float, samples: int, residual: float, tolerance: float
    ) -> "CheckResult":
        """Build a result whose pass flag follows from the residual (NaN never passes)."""
        return cls(
            check_id=check_id,
            description=description,
            kappa=kappa,
            samples=samples,
            max_abs_residual=residual,
            tolerance=tolerance,
            passed=residual <= tolerance,
        )


class CertificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    config: SamplingConfig
    results: List[CheckResult] = Field(default_factory=list)
    overall_pass: bool = True

    @model_validator(mode="after")
    def _overall_matches_results(self) -> "CertificationReport":
        if self.overall_pass != all(r.passed for r in self.results):
            raise ValueError("overall_pass must hold exactly when every check passes")
        return self

    @classmethod
    def from_results(cls, config: SamplingConfig, results: List[CheckResult]) -> "CertificationReport":
        return cls(config=config, results=results, overall_pass=all(r.passed for r in results))

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]


class ReportFormat(str, enum.Enum):
    JSON = "json"
    MARKDOWN = "md"


def encode_json(value: Any) -> str:
    """
    Serialize plain data (dict, list, str, bool, int, float, None) as JSON
    with floats written to 17 significant digits and non-finite floats as null.
    """
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g") if math.isfinite(value) else "null"
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(str(k), ensure_ascii=False)}: {encode_json(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(encode_json(v) for v in value) + "]"
    raise TypeError(f"cannot encode {type(value).__name__} as JSON")


def _format_residual(value: float) -> str:
    return f"{value:.3e}" if math.isfinite(value) else str(value)


def _render_markdown(report: CertificationReport) -> str:
    total = len(report.results)
    failed = len(report.failures)
    verdict = "PASS" if report.overall_pass else "FAIL"
    lines = [
        "# Certification report",
        "",
        f"**Overall: {verdict}** ({total} checks, {failed} failed; "
        f"seed {report.config.seed}, {report.config.samples_per_check} samples per check)",
        "",
        "| check | κ | samples | max residual | tolerance | status |",
        "|---|---|---|---|---|---|",
    ]
    for r in report.results:
        lines.append(
            f"| {r.check_id} | {r.kappa:g} | {r.samples} | {_format_residual(r.max_abs_residual)} "
            f"| {r.tolerance:g} | {'PASS' if r.passed else 'FAIL'} |"
        )
    return "\n".join(lines) + "\n"


def render_report(report: CertificationReport, fmt: ReportFormat = ReportFormat.JSON) -> str:
    """Render a report as schema-stable JSON or as a Markdown table."""
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.MARKDOWN:
        return _render_markdown(report)
    payload = {
        "config": report.config.model_dump(),
        "results": [r.model_dump(by_alias=True) for r in report.results],
        "overall_pass": report.overall_pass,
    }
    return encode_json(payload) + "\n"
