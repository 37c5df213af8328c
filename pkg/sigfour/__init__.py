"""
sigfour: Ramanujan's elliptic functions of signature four.

Exports the value types, the function family and the certifier so callers
can work from the package root.
"""

from sigfour.certifier import certify
from sigfour.errors import (
    BracketError,
    DomainError,
    InvalidSquareRoot,
    IterationLimit,
    PoleError,
    Sig4Error,
    SlowConvergence,
    SubdivisionLimit,
)
from sigfour.functions import (
    Dn2Path,
    PointClass,
    PointKind,
    Representative,
    Shift,
    Sig4Context,
    classify,
    cn2,
    dn2,
    rn,
    rn_prime,
    rn_squared,
    shift_value,
    sig4_context,
    sn2_squared,
)
from sigfour.hypergeom import Modulus, complete_K
from sigfour.report import CertificationReport, CheckResult, ReportFormat, SamplingConfig, render_report

__all__ = [
    "BracketError",
    "CertificationReport",
    "CheckResult",
    "DomainError",
    "Dn2Path",
    "InvalidSquareRoot",
    "IterationLimit",
    "Modulus",
    "PointClass",
    "PointKind",
    "PoleError",
    "ReportFormat",
    "Representative",
    "SamplingConfig",
    "Shift",
    "Sig4Context",
    "Sig4Error",
    "SlowConvergence",
    "SubdivisionLimit",
    "certify",
    "classify",
    "cn2",
    "complete_K",
    "dn2",
    "render_report",
    "rn",
    "rn_prime",
    "rn_squared",
    "shift_value",
    "sig4_context",
    "sn2_squared",
]
