"""
Command-line front end for sigfour.

Subcommands:
    eval      evaluate one function at one complex point
    periods   print K, the half-periods and the period ratios
    table     sample a function along the real or imaginary axis (CSV or JSON)
    certify   run the certification catalog and print the report

Payloads go to stdout; logs and diagnostics go to stderr. Exit status is 0
on success, 1 when certification fails and 2 for usage or domain errors.

Usage:
    python -m ui.cli eval --fn rn --kappa 0.5 --re 0.3 --im 0.2
"""

from __future__ import annotations

import argparse
import enum
import logging
import math
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

# Ensure project root on sys.path so `sigfour` can be imported
ROOT_DIR = Path(__file__).resolve().parent.parent
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from sigfour.certifier import certify  # noqa: E402
from sigfour.errors import PoleError, Sig4Error  # noqa: E402
from sigfour.functions import (  # noqa: E402
    Dn2Path,
    Sig4Context,
    cn2,
    dn2,
    rn,
    rn_prime,
    rn_squared,
    sig4_context,
    sn2_squared,
)
from sigfour.hypergeom import Modulus, complete_K  # noqa: E402
from sigfour.report import ReportFormat, SamplingConfig, encode_json, render_report  # noqa: E402
from sigfour.weierstrass import wp, wp_prime  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CERTIFICATION_FAILED = 1
EXIT_USAGE = 2

Evaluator = Callable[[Sig4Context, complex, Dn2Path], complex]

FUNCTIONS: Dict[str, Evaluator] = {
    "rn": lambda sc, z, path: rn(sc, z),
    "rnprime": lambda sc, z, path: rn_prime(sc, z),
    "rn2": lambda sc, z, path: rn_squared(sc, z),
    "dn2": lambda sc, z, path: dn2(sc, z, path),
    "cn2": lambda sc, z, path: cn2(sc, z),
    "sn2sq": lambda sc, z, path: sn2_squared(sc, z),
    "wpP": lambda sc, z, path: wp(sc.ctx_P, z),
    "wpPprime": lambda sc, z, path: wp_prime(sc.ctx_P, z),
    "wpp": lambda sc, z, path: wp(sc.ctx_p, z),
}


class Subcommand(str, enum.Enum):
    EVAL = "eval"
    PERIODS = "periods"
    TABLE = "table"
    CERTIFY = "certify"


class CliRequest(BaseModel):
    """A parsed and validated invocation; every kappa is checked against (0, 1) here."""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    kappas: List[float] = Field(min_length=1)
    function: Optional[str] = None
    re: float = 0.0
    im: float = 0.0
    path: Dn2Path = Dn2Path.VIA_RN
    start: float = 0.0
    end: float = 0.0
    count: int = Field(1, gt=0)
    axis: str = "real"
    output_format: str = "json"
    samples: int = Field(200, gt=0)
    seed: int = Field(20240917, ge=0)
    tol: float = Field(1e-8, gt=0.0)
    workers: int = Field(1, ge=1)

    @field_validator("kappas")
    @classmethod
    def _valid_moduli(cls, value: List[float]) -> List[float]:
        for kappa in value:
            Modulus(kappa)
        return value

    @field_validator("re", "im", "start", "end", "tol")
    @classmethod
    def _finite(cls, value: float, info: ValidationInfo) -> float:
        if not math.isfinite(value):
            raise ValueError(f"{info.field_name} must be finite, got {value!r}")
        return value

    @property
    def modulus(self) -> Modulus:
        return Modulus(self.kappas[0])


def _kappa_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigfour", description="Elliptic functions of signature four.")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="logging threshold for stderr (default WARNING)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a function at one point")
    p_eval.add_argument("--fn", required=True, choices=sorted(FUNCTIONS))
    p_eval.add_argument("--kappa", required=True, type=float)
    p_eval.add_argument("--re", required=True, type=float)
    p_eval.add_argument("--im", required=True, type=float)
    p_eval.add_argument("--path", default="via_rn", choices=[p.value for p in Dn2Path])

    p_periods = sub.add_parser("periods", help="print K, half-periods and period ratios")
    p_periods.add_argument("--kappa", required=True, type=float)

    p_table = sub.add_parser("table", help="sample a function along an axis")
    p_table.add_argument("--fn", required=True, choices=sorted(FUNCTIONS))
    p_table.add_argument("--kappa", required=True, type=float)
    p_table.add_argument("--start", required=True, type=float)
    p_table.add_argument("--end", required=True, type=float)
    p_table.add_argument("--count", required=True, type=int)
    p_table.add_argument("--axis", default="real", choices=["real", "imag"])
    p_table.add_argument("--format", dest="output_format", default="csv", choices=["csv", "json"])
    p_table.add_argument("--path", default="via_rn", choices=[p.value for p in Dn2Path])

    p_certify = sub.add_parser("certify", help="run the certification catalog")
    p_certify.add_argument("--kappa", type=_kappa_list, default=[0.3, 0.5, 0.8])
    p_certify.add_argument("--samples", type=int, default=200)
    p_certify.add_argument("--seed", type=int, default=20240917)
    p_certify.add_argument("--tol", type=float, default=1e-8)
    p_certify.add_argument("--format", dest="output_format", default="json", choices=[f.value for f in ReportFormat])
    p_certify.add_argument("--workers", type=int, default=1)
    return parser


def to_request(args: argparse.Namespace) -> CliRequest:
    fields = {k: v for k, v in vars(args).items() if v is not None and k not in ("kappa", "fn", "log_level")}
    kappa = args.kappa
    fields["kappas"] = kappa if isinstance(kappa, list) else [kappa]
    if getattr(args, "fn", None) is not None:
        fields["function"] = args.fn
    return CliRequest(**fields)


def _complex_json(value: complex) -> dict:
    return {"re": float(value.real), "im": float(value.imag)}


def run_eval(request: CliRequest) -> int:
    sc = sig4_context(request.modulus)
    z = complex(request.re, request.im)
    value = complex(FUNCTIONS[request.function](sc, z, request.path))
    payload = {
        "function": request.function,
        "kappa": request.kappas[0],
        "z": _complex_json(z),
        "value": _complex_json(value),
    }
    sys.stdout.write(encode_json(payload) + "\n")
    return EXIT_OK


def run_periods(request: CliRequest) -> int:
    m = request.modulus
    sc = sig4_context(m)
    big = sc.ctx_P.half_periods
    small = sc.ctx_p.half_periods
    payload = {
        "kappa": m.kappa,
        "K": complete_K(m),
        "Omega": big.omega,
        "OmegaPrimeMag": big.omega_prime_mag,
        "omega": small.omega,
        "omegaPrimeMag": small.omega_prime_mag,
        "periodRatio": _complex_json(big.ratio),
        "pPeriodRatio": _complex_json(small.ratio),
    }
    sys.stdout.write(encode_json(payload) + "\n")
    return EXIT_OK


def table_rows(request: CliRequest) -> List[dict]:
    """One row per grid point; value fields are None where the function has a pole."""
    sc = sig4_context(request.modulus)
    evaluator = FUNCTIONS[request.function]
    rows = []
    for u in np.linspace(request.start, request.end, request.count):
        u = float(u)
        z = complex(u, 0.0) if request.axis == "real" else complex(0.0, u)
        try:
            value = complex(evaluator(sc, z, request.path))
            rows.append({"u": u, "re": value.real, "im": value.imag})
        except PoleError as exc:
            logger.debug("TABLE_POLE: u=%r, nearest=%r (%s)", u, exc.nearest, exc.label)
            rows.append({"u": u, "re": None, "im": None})
    return rows


def _csv_field(value: Optional[float]) -> str:
    return "" if value is None else format(value, ".17g")


def run_table(request: CliRequest) -> int:
    rows = table_rows(request)
    if request.output_format == "json":
        payload = {"function": request.function, "kappa": request.kappas[0], "axis": request.axis, "rows": rows}
        sys.stdout.write(encode_json(payload) + "\n")
    else:
        lines = ["u,re,im"]
        lines.extend(f"{_csv_field(r['u'])},{_csv_field(r['re'])},{_csv_field(r['im'])}" for r in rows)
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def run_certify(request: CliRequest) -> int:
    config = SamplingConfig(
        seed=request.seed,
        samples_per_check=request.samples,
        tolerance=request.tol,
        kappa_list=request.kappas,
        workers=request.workers,
    )
    report = certify(config)
    sys.stdout.write(render_report(report, ReportFormat(request.output_format)))
    return EXIT_OK if report.overall_pass else EXIT_CERTIFICATION_FAILED


HANDLERS = {
    Subcommand.EVAL: run_eval,
    Subcommand.PERIODS: run_periods,
    Subcommand.TABLE: run_table,
    Subcommand.CERTIFY: run_certify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )

    try:
        request = to_request(args)
        logger.info("CLI_REQUEST: subcommand=%s, kappas=%s", request.subcommand.value, request.kappas)
        return HANDLERS[request.subcommand](request)
    except (Sig4Error, ValueError) as exc:
        logger.error("CLI_REQUEST_FAILED: %s: %s", type(exc).__name__, exc)
        sys.stderr.write(f"sigfour: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
