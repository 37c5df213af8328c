"""
C3, C4, C5, C10: periods, antiperiods and the half-period shift formulas.
"""

import logging

from sigfour.checks._shared import ANALYTIC, CheckInput, CheckSpec, Measurement, indicator, relative
from sigfour.functions import Shift, cn2, dn2, rn, shift_value

logger = logging.getLogger(__name__)

SAMPLE_POINT = complex(0.3, 0.1)
DISCRIMINATION_GAP = 0.01


def _rn_period(multiple_of: str):
    def measure(inp: CheckInput) -> Measurement:
        sc = inp.sc
        period = 2.0 * (sc.Omega if multiple_of == "Omega" else sc.Omega_prime)

        def residual(z: complex) -> float:
            value = rn(sc, z)
            return relative(rn(sc, z + period) - value, value)

        return inp.sweep(residual)

    return measure


def _omega_not_a_period(inp: CheckInput) -> Measurement:
    sc = inp.sc
    gap = abs(rn(sc, SAMPLE_POINT + sc.Omega) - rn(sc, SAMPLE_POINT))
    return Measurement(1, indicator(gap > DISCRIMINATION_GAP))


def _antisymmetry(inp: CheckInput) -> Measurement:
    sc = inp.sc

    def residual(z: complex) -> float:
        value = rn(sc, z)
        return relative(rn(sc, z + sc.Omega) + value, value)

    return inp.sweep(residual)


def _reciprocal(inp: CheckInput) -> Measurement:
    sc = inp.sc
    half_kappa = 0.5 * sc.kappa
    return inp.sweep(lambda z: abs(rn(sc, z + sc.Omega_prime) * rn(sc, z) - half_kappa))


def _closed_shift(shift: Shift):
    def measure(inp: CheckInput) -> Measurement:
        sc = inp.sc
        offset = sc.Omega_prime if shift is Shift.OMEGA_PRIME else sc.Omega + sc.Omega_prime

        def residual(z: complex) -> float:
            direct = rn(sc, z + offset)
            return relative(shift_value(sc, z, shift) - direct, direct)

        return inp.sweep(residual)

    return measure


def _dn2_period(which: str):
    def measure(inp: CheckInput) -> Measurement:
        sc = inp.sc
        period = sc.Omega if which == "Omega" else 2.0 * sc.Omega_prime

        def residual(z: complex) -> float:
            value = dn2(sc, z)
            return relative(dn2(sc, z + period) - value, value)

        return inp.sweep(residual)

    return measure


def _omega_prime_not_a_dn2_period(inp: CheckInput) -> Measurement:
    sc = inp.sc
    gap = abs(dn2(sc, SAMPLE_POINT + sc.Omega_prime) - dn2(sc, SAMPLE_POINT))
    return Measurement(1, indicator(gap > DISCRIMINATION_GAP))


def _half_period_relation(inp: CheckInput) -> Measurement:
    big = inp.sc.ctx_P.half_periods
    small = inp.sc.ctx_p.half_periods
    return Measurement(
        1, max(abs(big.omega - 2.0 * small.omega), abs(big.omega_prime_mag - small.omega_prime_mag))
    )


def _cn2_antiperiod(inp: CheckInput) -> Measurement:
    sc = inp.sc

    def residual(z: complex) -> float:
        value = cn2(sc, z)
        return relative(cn2(sc, z + sc.Omega) + value, value)

    return inp.sweep(residual)


period_checks = [
    CheckSpec("C3.period_2Omega", "rn(z + 2 Omega) = rn(z)", ANALYTIC, _rn_period("Omega")),
    CheckSpec("C3.period_2OmegaPrime", "rn(z + 2 Omega') = rn(z)", ANALYTIC, _rn_period("OmegaPrime")),
    CheckSpec("C3.Omega_not_period", "rn(z + Omega) differs from rn(z) at 0.3+0.1i", ANALYTIC, _omega_not_a_period),
    CheckSpec("C4.antisymmetry", "rn(z + Omega) = -rn(z)", ANALYTIC, _antisymmetry),
    CheckSpec("C5.recip", "rn(z + Omega') rn(z) = kappa/2", ANALYTIC, _reciprocal),
    CheckSpec(
        "C5.shift_OmegaPrime",
        "P'/(2(1/6 - P)) equals rn(z + Omega')",
        ANALYTIC,
        _closed_shift(Shift.OMEGA_PRIME),
    ),
    CheckSpec(
        "C5.shift_OmegaPlusOmegaPrime",
        "P'/(2(P - 1/6)) equals rn(z + Omega + Omega')",
        ANALYTIC,
        _closed_shift(Shift.OMEGA_PLUS_OMEGA_PRIME),
    ),
    CheckSpec("C10.dn2_period_Omega", "dn2(z + Omega) = dn2(z)", ANALYTIC, _dn2_period("Omega")),
    CheckSpec("C10.dn2_period_2OmegaPrime", "dn2(z + 2 Omega') = dn2(z)", ANALYTIC, _dn2_period("OmegaPrime")),
    CheckSpec(
        "C10.OmegaPrime_not_dn2_period",
        "dn2(z + Omega') differs from dn2(z) at 0.3+0.1i",
        ANALYTIC,
        _omega_prime_not_a_dn2_period,
    ),
    CheckSpec("C10.half_periods", "Omega = 2 omega and |Omega'| = |omega'|", 1e-5 * ANALYTIC, _half_period_relation),
    CheckSpec("C10.cn2_antiperiod", "cn2(z + Omega) = -cn2(z)", ANALYTIC, _cn2_antiperiod),
]
