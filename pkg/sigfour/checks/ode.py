"""
C2, C8, C15: the differential equations.

Residuals are divided by a power of (1 + |value|) matching the degree of the
right-hand side, so sample points near (but outside) the pole-exclusion
disks are measured on a relative scale.
"""

import logging

from numpy.polynomial import Polynomial

from sigfour.checks._shared import ANALYTIC, FINITE_DIFFERENCE, CheckInput, CheckSpec, Measurement, grid_measurement
from sigfour.functions import Dn2Path, dn2, rn, rn_prime, rn_second_order_residual
from sigfour.numerics import central_derivative
from sigfour.weierstrass import QuarticCoefficients, quartic_invariants, quartic_ivp_solution

logger = logging.getLogger(__name__)

TRANSLATION = 0.3


def rn_quartic(kappa: float) -> QuarticCoefficients:
    """f(w) = w^4 - w^2 + kappa^2/4, the right-hand side of (rn')^2 = f(rn)."""
    return QuarticCoefficients(1.0, 0.0, -1.0 / 6.0, 0.0, 0.25 * kappa * kappa)


def _ivp_residual(inp: CheckInput) -> Measurement:
    sc = inp.sc
    quarter_k2 = 0.25 * sc.kappa**2

    def residual(z: complex) -> float:
        value = rn(sc, z)
        slope = rn_prime(sc, z)
        return abs(slope * slope - (value**4 - value**2 + quarter_k2)) / (1.0 + abs(value) ** 4)

    return inp.sweep(residual)


def _derivative_fd(inp: CheckInput) -> Measurement:
    sc = inp.sc

    def residual(z: complex) -> float:
        numeric = central_derivative(lambda w: rn(sc, w), z)
        return abs(numeric - rn_prime(sc, z)) / (1.0 + abs(rn(sc, z)) ** 2)

    return inp.sweep(residual)


def _dn2_ode(inp: CheckInput) -> Measurement:
    sc = inp.sc
    lam2 = sc.modulus.lam**2

    def residual(z: complex) -> float:
        value = dn2(sc, z)
        slope = central_derivative(lambda w: dn2(sc, w), z)
        return abs(slope * slope - 2.0 * (1.0 - value) * (value * value - lam2)) / (1.0 + abs(value) ** 3)

    return inp.sweep(residual)


def _dn2_dual_path(inp: CheckInput) -> Measurement:
    sc = inp.sc

    def residual(z: complex) -> float:
        via_rn = dn2(sc, z, Dn2Path.VIA_RN)
        return abs(via_rn - dn2(sc, z, Dn2Path.VIA_P)) / (1.0 + abs(via_rn))

    return inp.sweep(residual)


def _second_order(inp: CheckInput) -> Measurement:
    sc = inp.sc
    return inp.sweep(lambda z: rn_second_order_residual(sc, z) / (1.0 + abs(rn(sc, z)) ** 3))


def _quartic_invariants(inp: CheckInput) -> Measurement:
    inv = quartic_invariants(rn_quartic(inp.kappa))
    expected = inp.sc.ctx_P.invariants
    return grid_measurement([abs(inv.g2 - expected.g2), abs(inv.g3 - expected.g3)])


def _translation_invariance(inp: CheckInput) -> Measurement:
    q = rn_quartic(inp.kappa)
    shifted = Polynomial(q.power_coefficients())(Polynomial([TRANSLATION, 1.0]))
    c0, c1, c2, c3, c4 = shifted.coef
    moved = quartic_invariants(QuarticCoefficients.from_power_coefficients(c4, c3, c2, c1, c0))
    original = quartic_invariants(q)
    return grid_measurement([abs(moved.g2 - original.g2), abs(moved.g3 - original.g3)])


def _ivp_formula(inp: CheckInput) -> Measurement:
    sc = inp.sc
    q = rn_quartic(sc.kappa)

    def residual(z: complex) -> float:
        direct = rn(sc, z)
        generic = quartic_ivp_solution(q, 0.0, -0.5 * sc.kappa, z)
        return abs(generic - direct) / (1.0 + abs(direct))

    return inp.sweep(residual)


ode_checks = [
    CheckSpec("C2.ivp", "(rn')^2 = rn^4 - rn^2 + kappa^2/4 with analytic rn'", ANALYTIC, _ivp_residual),
    CheckSpec("C2.derivative_fd", "analytic rn' against a central difference of rn", FINITE_DIFFERENCE, _derivative_fd),
    CheckSpec("C8.dn2_ode", "(dn2')^2 = 2(1 - dn2)(dn2^2 - lambda^2), dn2' by central difference", FINITE_DIFFERENCE, _dn2_ode),
    CheckSpec("C8.dual_path", "dn2 = 1 - 2 rn^2 against dn2 = 1 - (kappa^2/2)/(1/3 + p)", ANALYTIC, _dn2_dual_path),
    CheckSpec("C15.second_order", "rn'' = 2 rn^3 - rn, rn'' by central difference", FINITE_DIFFERENCE, _second_order),
    CheckSpec("C15.quartic_invariants", "invariants of w^4 - w^2 + kappa^2/4 equal (G2, G3)", 1e-7 * ANALYTIC, _quartic_invariants),
    CheckSpec("C15.translation", "quartic invariants are unchanged by w -> w + 0.3", 1e-5 * ANALYTIC, _translation_invariance),
    CheckSpec("C15.ivp_formula", "quartic IVP solution on its own AGM lattice, a = 0, A = -kappa/2, reproduces rn", ANALYTIC, _ivp_formula),
]
