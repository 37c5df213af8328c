"""
C6, C7, C13, C16: the two Weierstrass functions themselves.

Midpoint values, the homogeneity relation between P at kappa and p at
lambda, Eisenstein sums over the hypergeometric lattices and the AGM
half-periods.
"""

import logging
import math

from sigfour.checks._shared import (
    ANALYTIC,
    LATTICE_SUM,
    CheckInput,
    CheckSpec,
    Measurement,
    grid_measurement,
    pair_distance,
)
from sigfour.functions import dn2_midpoints, sig4_context
from sigfour.weierstrass import WeierstrassContext, context_from_invariants, lattice_invariants_oracle, wp_pair

logger = logging.getLogger(__name__)

LATTICE_CUTOFF = 300
HOMOGENEITY_SAMPLES = 100
_I_SQRT2 = complex(0.0, math.sqrt(2.0))


def _midpoint_residuals(ctx: WeierstrassContext, expected) -> list:
    residuals = []
    for z, root in zip((complex(ctx.omega), ctx.omega + ctx.omega_prime, ctx.omega_prime), expected):
        value, derivative = wp_pair(ctx, z)
        residuals.append(abs(value - root))
        residuals.append(abs(derivative))
    return residuals


def _midpoints_P(inp: CheckInput) -> Measurement:
    k = inp.kappa
    return grid_measurement(_midpoint_residuals(inp.sc.ctx_P, (1.0 / 6.0, -1.0 / 12.0 + k / 4.0, -1.0 / 12.0 - k / 4.0)))


def _midpoints_p(inp: CheckInput) -> Measurement:
    lam = inp.sc.modulus.lam
    return grid_measurement(_midpoint_residuals(inp.sc.ctx_p, (1.0 / 6.0 + lam / 2.0, 1.0 / 6.0 - lam / 2.0, -1.0 / 3.0)))


def _dn2_midpoints(inp: CheckInput) -> Measurement:
    lam = inp.sc.modulus.lam
    at_omega, at_corner = dn2_midpoints(inp.sc)
    return grid_measurement([abs(at_omega - lam), abs(at_corner + lam)])


def _homogeneity(inp: CheckInput) -> Measurement:
    sc = inp.sc
    dual = sig4_context(sc.modulus.complementary())

    def residual(z: complex) -> float:
        return abs(wp_pair(dual.ctx_p, z)[0] + 2.0 * wp_pair(sc.ctx_P, _I_SQRT2 * z)[0])

    return inp.sweep(residual, HOMOGENEITY_SAMPLES, dual.ctx_p)


def _period_correspondence(inp: CheckInput) -> Measurement:
    big = inp.sc.ctx_P.half_periods
    dual = sig4_context(inp.sc.modulus.complementary()).ctx_p.half_periods
    root2 = math.sqrt(2.0)
    return grid_measurement(
        [abs(big.omega - root2 * dual.omega_prime_mag), abs(big.omega_prime_mag - root2 * dual.omega)]
    )


def _eisenstein(which: str):
    def measure(inp: CheckInput) -> Measurement:
        ctx = inp.sc.ctx_P if which == "P" else inp.sc.ctx_p
        summed = lattice_invariants_oracle(ctx.half_periods, LATTICE_CUTOFF)
        return grid_measurement(
            [abs(summed.g2 - ctx.invariants.g2), abs(summed.g3 - ctx.invariants.g3)]
        )

    return measure


def _agm_half_periods(which: str):
    def measure(inp: CheckInput) -> Measurement:
        ctx = inp.sc.ctx_P if which == "P" else inp.sc.ctx_p
        agm = context_from_invariants(ctx.invariants, f"agm-{which}")
        periods = (agm.half_periods.omega, agm.half_periods.omega_prime_mag)
        expected = (ctx.half_periods.omega, ctx.half_periods.omega_prime_mag)
        return grid_measurement([pair_distance(periods, expected), pair_distance(agm.roots, ctx.roots)])

    return measure


lattice_checks = [
    CheckSpec("C6.midpoints_P", "P at Omega, Omega + Omega', Omega' equals 1/6, -1/12 +- kappa/4; P' vanishes", 1e-2 * ANALYTIC, _midpoints_P),
    CheckSpec("C6.midpoints_p", "p at omega, omega + omega', omega' equals 1/6 +- lambda/2, -1/3; p' vanishes", 1e-2 * ANALYTIC, _midpoints_p),
    CheckSpec("C6.dn2_midpoints", "dn2(omega) = lambda and dn2(omega + omega') = -lambda", ANALYTIC, _dn2_midpoints),
    CheckSpec("C7.homogeneity", "p at lambda equals -2 P(i sqrt(2) z) at kappa", ANALYTIC, _homogeneity),
    CheckSpec(
        "C7.period_correspondence",
        "Omega = sqrt(2) |omega'| and |Omega'| = sqrt(2) omega across kappa and lambda",
        1e-4 * ANALYTIC,
        _period_correspondence,
    ),
    CheckSpec("C13.eisenstein_P", "Eisenstein sums over the P lattice reproduce (G2, G3)", LATTICE_SUM, _eisenstein("P")),
    CheckSpec("C13.eisenstein_p", "Eisenstein sums over the p lattice reproduce (g2, g3)", LATTICE_SUM, _eisenstein("p")),
    CheckSpec("C16.agm_P", "AGM half-periods and trigonometric roots of (G2, G3) match the P context", ANALYTIC, _agm_half_periods("P")),
    CheckSpec("C16.agm_p", "AGM half-periods and trigonometric roots of (g2, g3) match the p context", ANALYTIC, _agm_half_periods("p")),
]
