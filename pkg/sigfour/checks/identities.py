"""
C9, C11, C14: algebraic identities, the Chebyshev link and the simple-zero
obstruction to a meromorphic sn2.
"""

import logging
import math

from sigfour.checks._shared import ANALYTIC, CheckInput, CheckSpec, Measurement, grid_measurement, relative
from sigfour.functions import (
    Dn2Path,
    chebyshev_residual,
    cn2,
    dn2,
    rn,
    rn_prime,
    sn2_squared,
    solve_rn_unit_point,
)

logger = logging.getLogger(__name__)

CHEBYSHEV_SAMPLES = 100
_SQRT8 = math.sqrt(8.0)


def _cn2_dn2(inp: CheckInput) -> Measurement:
    sc = inp.sc
    k2 = sc.kappa**2
    lam2 = sc.modulus.lam**2

    def residual(z: complex) -> float:
        c = cn2(sc, z)
        d = dn2(sc, z)
        return relative(k2 * c * c - (d * d - lam2), d * d)

    return inp.sweep(residual)


def _cn2_sn2(inp: CheckInput) -> Measurement:
    sc = inp.sc

    def residual(z: complex) -> float:
        c = cn2(sc, z)
        s2 = sn2_squared(sc, z)
        return relative(c * c + s2 - 1.0, s2)

    return inp.sweep(residual)


def _dn2_sn2(inp: CheckInput) -> Measurement:
    sc = inp.sc
    k2 = sc.kappa**2

    def residual(z: complex) -> float:
        d = dn2(sc, z)
        return relative(d * d + k2 * sn2_squared(sc, z) - 1.0, d * d)

    return inp.sweep(residual)


def _dn2_from_rn(inp: CheckInput) -> Measurement:
    sc = inp.sc

    def residual(z: complex) -> float:
        value = rn(sc, z)
        return relative(dn2(sc, z, Dn2Path.VIA_P) - (1.0 - 2.0 * value * value), value * value)

    return inp.sweep(residual)


def _chebyshev(inp: CheckInput) -> Measurement:
    sc = inp.sc

    # Sample w in the rn cell; the Chebyshev variable is z = w / sqrt(8).
    def residual(w: complex) -> float:
        return chebyshev_residual(sc, w / _SQRT8) / (1.0 + abs(rn(sc, w)) ** 4)

    return inp.sweep(residual, CHEBYSHEV_SAMPLES)


def _simple_zero(inp: CheckInput) -> Measurement:
    sc = inp.sc
    point = solve_rn_unit_point(sc)
    value = rn(sc, point)
    slope = rn_prime(sc, point)
    derivative = abs(slope * (2.0 * value - 4.0 * value**3))
    logger.debug("SIMPLE_ZERO_CHECK: kappa=%r, z1=%r, rn=%r, derivative=%r", sc.kappa, point, value, derivative)
    if derivative < 0.5 * sc.kappa:
        return Measurement(1, math.inf)
    return grid_measurement([abs(value * value - 1.0), abs(derivative - sc.kappa)])


identity_checks = [
    CheckSpec("C9.cn2_dn2", "kappa^2 cn2^2 = dn2^2 - lambda^2", ANALYTIC, _cn2_dn2),
    CheckSpec("C9.cn2_sn2", "cn2^2 + sn2^2 = 1", ANALYTIC, _cn2_sn2),
    CheckSpec("C9.dn2_sn2", "dn2^2 + kappa^2 sn2^2 = 1", ANALYTIC, _dn2_sn2),
    CheckSpec("C9.dn2_from_rn", "dn2 through p equals 1 - 2 rn^2", ANALYTIC, _dn2_from_rn),
    CheckSpec("C11.chebyshev", "y = rn(sqrt(8) z) solves (y')^2 = T4(y) - (1 - 2 kappa^2)", ANALYTIC, _chebyshev),
    CheckSpec(
        "C14.simple_zero",
        "rn^2 (1 - rn^2) has a simple zero (derivative of size kappa) where rn = 1",
        ANALYTIC,
        _simple_zero,
    ),
]
