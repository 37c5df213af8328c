"""
Certification coordinator.

Runs every catalog check for every kappa of a SamplingConfig and collects
the results into a CertificationReport. Jobs are independent: each has its
own sample stream, so the report does not depend on how many workers run
them or in which order they finish.
"""

from __future__ import annotations

import concurrent.futures
import logging
import math
from typing import List, Sequence, Tuple

from sigfour.checks import CATALOG, CheckInput, CheckSpec
from sigfour.checks._shared import stream_key
from sigfour.errors import Sig4Error
from sigfour.functions import Sig4Context, sig4_context
from sigfour.hypergeom import Modulus
from sigfour.report import CertificationReport, CheckResult, SamplingConfig

logger = logging.getLogger(__name__)

Job = Tuple[CheckSpec, int, Sig4Context]


def run_check(spec: CheckSpec, kappa_index: int, sc: Sig4Context, config: SamplingConfig) -> CheckResult:
    """Run one check at one kappa; a library error becomes an infinite residual."""
    tolerance = config.tier_tolerance(spec.tier)
    inp = CheckInput(sc, config, stream_key(config.seed, spec.check_id, kappa_index))
    try:
        measurement = spec.measure(inp)
        samples, residual = measurement.samples, measurement.residual
    except Sig4Error as exc:
        logger.warning(
            "CHECK_RAISED: Recording failure. check=%s, kappa=%r, error=%s: %s",
            spec.check_id,
            sc.kappa,
            type(exc).__name__,
            exc,
        )
        samples, residual = 0, math.inf

    result = CheckResult.judge(spec.check_id, spec.description, sc.kappa, samples, residual, tolerance)
    logger.debug(
        "CHECK_DONE: check=%s, kappa=%r, samples=%d, residual=%r, tolerance=%r, pass=%s",
        spec.check_id,
        sc.kappa,
        samples,
        residual,
        tolerance,
        result.passed,
    )
    return result


def certify(config: SamplingConfig, catalog: Sequence[CheckSpec] = CATALOG) -> CertificationReport:
    """
    Run the certification catalog.

    Args:
        config: Seed, sample count, exclusion radius, tolerance, kappas and
            worker count.
        catalog: Checks to run, in report order.

    Returns:
        The report; results are ordered by check, then by kappa.
    """
    logger.info(
        "CERTIFY_START: Running %d checks. kappas=%s, samples=%d, seed=%d, workers=%d",
        len(catalog),
        config.kappa_list,
        config.samples_per_check,
        config.seed,
        config.workers,
    )
    contexts = [sig4_context(Modulus(kappa)) for kappa in config.kappa_list]
    jobs: List[Job] = [(spec, index, sc) for spec in catalog for index, sc in enumerate(contexts)]

    if config.workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(lambda job: run_check(*job, config), jobs))
    else:
        results = [run_check(*job, config) for job in jobs]

    report = CertificationReport.from_results(config, results)
    logger.info(
        "CERTIFY_COMPLETE: %d results, %d failed. overall_pass=%s",
        len(results),
        len(report.failures),
        report.overall_pass,
    )
    return report
