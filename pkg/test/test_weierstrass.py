"""
Test script for sigfour/weierstrass.py
Contexts, ℘ evaluation, lattice oracles and the quartic IVP formula.
"""

import cmath
import logging
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from numpy.polynomial import Polynomial

from sigfour.errors import DomainError, InvalidSquareRoot, PoleError
from sigfour.functions import rn, sig4_context
from sigfour.hypergeom import Modulus, complete_K
from sigfour.numerics import central_derivative
from sigfour.weierstrass import (
    HalfPeriods,
    Invariants,
    QuarticCoefficients,
    context_from_invariants,
    context_p,
    context_P,
    discriminant,
    eisenstein_invariants,
    lattice_invariants_oracle,
    quartic_invariants,
    quartic_ivp_solution,
    wp,
    wp_lattice_sum,
    wp_pair,
    wp_prime,
)

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

HALF = Modulus(0.5)
Z0 = complex(0.3, 0.2)

cell_points = st.builds(
    complex,
    st.floats(min_value=-1.5, max_value=1.5),
    st.floats(min_value=-1.4, max_value=1.4),
).filter(lambda z: abs(z) > 0.05)


def cubic_residual(ctx, z):
    value, derivative = wp_pair(ctx, z)
    g2, g3 = ctx.invariants.g2, ctx.invariants.g3
    return abs(derivative**2 - (4 * value**3 - g2 * value - g3)) / (1 + abs(value) ** 3)


def test_context_P_invariants_and_periods():
    ctx = context_P(HALF)
    assert ctx.invariants.g2 == pytest.approx(7 / 48, abs=1e-16)
    assert ctx.invariants.g3 == pytest.approx(-5 / 864, abs=1e-17)
    assert sum(ctx.roots) == pytest.approx(0.0, abs=1e-15)
    assert ctx.omega == pytest.approx(2 * complete_K(HALF), abs=1e-12)


def test_context_p_invariants_and_periods():
    m = Modulus(0.6)
    ctx = context_p(m)
    assert ctx.invariants.g2 == pytest.approx(2.92 / 3, abs=1e-15)
    assert ctx.invariants.g3 == pytest.approx(4.76 / 27, abs=1e-15)
    assert context_P(m).omega == pytest.approx(2 * ctx.omega, abs=1e-13)
    assert context_P(m).half_periods.omega_prime_mag == pytest.approx(ctx.half_periods.omega_prime_mag, abs=1e-13)


@pytest.mark.parametrize("kappa", [0.3, 0.5, 0.8])
def test_midpoint_values(kappa):
    for ctx in (context_P(Modulus(kappa)), context_p(Modulus(kappa))):
        e1, e2, e3 = ctx.roots
        corners = (complex(ctx.omega), ctx.omega + ctx.omega_prime, ctx.omega_prime)
        for z, root in zip(corners, (e1, e2, e3)):
            value, derivative = wp_pair(ctx, z)
            assert abs(value - root) <= 1e-10
            assert abs(derivative) <= 1e-9


def test_wp_laurent_leading_term():
    ctx = context_P(HALF)
    z = 1e-3 * cmath.exp(0.7j)
    assert abs(z * z * wp(ctx, z) - 1) <= 1e-5


def test_wp_against_lattice_sum():
    ctx = context_P(HALF)
    assert abs(wp(ctx, Z0) - wp_lattice_sum(ctx, Z0, cutoff=200)) <= 1e-6


def test_wp_prime_against_finite_difference():
    ctx = context_P(HALF)
    numeric = central_derivative(lambda z: wp(ctx, z), Z0, h=1e-5)
    assert abs(numeric - wp_prime(ctx, Z0)) <= 1e-5


def test_wp_pole_guard_reports_lattice_point():
    ctx = context_P(HALF)
    point = 2 * ctx.omega + 2 * ctx.omega_prime
    with pytest.raises(PoleError) as info:
        wp(ctx, point + 1e-10)
    assert info.value.nearest == pytest.approx(point)


@settings(max_examples=40, deadline=None)
@given(cell_points)
def test_wp_differential_equation(z):
    assert cubic_residual(context_P(HALF), z) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(cell_points)
def test_wp_parity_and_periodicity(z):
    ctx = context_P(Modulus(0.8))
    value, derivative = wp_pair(ctx, z)
    scale = 1 + abs(value)
    assert abs(wp(ctx, -z) - value) <= 1e-10 * scale
    assert abs(wp_prime(ctx, -z) + derivative) <= 1e-10 * (1 + abs(derivative))
    assert abs(wp(ctx, z + 2 * ctx.omega) - value) <= 1e-9 * scale
    assert abs(wp(ctx, z + 2 * ctx.omega_prime) - value) <= 1e-9 * scale


@settings(max_examples=30, deadline=None)
@given(st.builds(complex, st.floats(-0.7, 0.7), st.floats(-0.7, 0.7)).filter(lambda z: abs(z) > 0.05))
def test_homogeneity_between_kappa_and_lambda(z):
    m = Modulus(0.6)
    small = wp(context_p(m.complementary()), z)
    assert abs(small + 2 * wp(context_P(m), complex(0, math.sqrt(2)) * z)) <= 1e-9 * (1 + abs(small))


def test_period_correspondence():
    m = Modulus(0.6)
    big = context_P(m).half_periods
    dual = context_p(m.complementary()).half_periods
    assert big.omega == pytest.approx(math.sqrt(2) * dual.omega_prime_mag, abs=1e-12)
    assert big.omega_prime_mag == pytest.approx(math.sqrt(2) * dual.omega, abs=1e-12)


def test_context_from_invariants_matches_hypergeometric_periods():
    ctx = context_P(HALF)
    agm = context_from_invariants(ctx.invariants)
    assert agm.omega == pytest.approx(ctx.omega, rel=1e-13)
    assert agm.half_periods.omega_prime_mag == pytest.approx(ctx.half_periods.omega_prime_mag, rel=1e-13)
    assert agm.roots == pytest.approx(ctx.roots, abs=1e-14)


def test_context_from_invariants_rejects_complex_roots():
    with pytest.raises(DomainError):
        context_from_invariants(Invariants(0.0, 1.0))
    assert discriminant(Invariants(1.0, 1.0)) < 0


def test_half_periods_validation():
    with pytest.raises(DomainError):
        HalfPeriods(1.0, 0.0)
    assert HalfPeriods(1.0, 2.0).ratio == 2j


@pytest.mark.parametrize("z", [complex(math.inf, 0.0), complex(0.3, math.nan), complex(-math.inf, math.inf)])
def test_reduce_rejects_non_finite_points(z):
    ctx = context_P(HALF)
    with pytest.raises(DomainError, match="non-finite"):
        ctx.reduce(z)
    with pytest.raises(DomainError):
        wp(ctx, z)


def test_lattice_oracle_square_lattice():
    inv = lattice_invariants_oracle(HalfPeriods(1.0, 1.0), cutoff=60)
    assert abs(inv.g3) <= 1e-6


def test_lattice_oracle_hexagonal_lattice():
    g2, _ = eisenstein_invariants(1.0, cmath.exp(1j * math.pi / 3), cutoff=300)
    assert abs(g2) <= 1e-4


def test_lattice_oracle_hypergeometric_periods():
    ctx = context_P(HALF)
    inv = lattice_invariants_oracle(ctx.half_periods, cutoff=300)
    assert abs(inv.g2 - 7 / 48) <= 1e-4
    assert abs(inv.g3 + 5 / 864) <= 1e-4


def test_lattice_oracle_cutoff_floor():
    with pytest.raises(DomainError):
        lattice_invariants_oracle(HalfPeriods(1.0, 1.0), cutoff=10)


def rn_quartic(kappa):
    return QuarticCoefficients(1.0, 0.0, -1.0 / 6.0, 0.0, kappa * kappa / 4)


def test_quartic_invariants_of_rn_quartic():
    inv = quartic_invariants(rn_quartic(0.5))
    ctx = context_P(HALF)
    assert abs(inv.g2 - ctx.invariants.g2) <= 1e-15
    assert abs(inv.g3 - ctx.invariants.g3) <= 1e-15
    assert quartic_invariants(QuarticCoefficients(1, 0, 0, 0, 0)) == Invariants(0.0, 0.0)


def test_quartic_invariants_translation():
    q = rn_quartic(0.7)
    c0, c1, c2, c3, c4 = Polynomial(q.power_coefficients())(Polynomial([0.3, 1.0])).coef
    moved = quartic_invariants(QuarticCoefficients.from_power_coefficients(c4, c3, c2, c1, c0))
    original = quartic_invariants(q)
    assert abs(moved.g2 - original.g2) <= 1e-13
    assert abs(moved.g3 - original.g3) <= 1e-13


def test_quartic_ivp_rejects_bad_square_root():
    with pytest.raises(InvalidSquareRoot):
        quartic_ivp_solution(rn_quartic(0.5), 0.0, 0.3, Z0)


def test_quartic_ivp_rejects_repeated_zero():
    # (w^2 - 1)^2 has double zeros.
    with pytest.raises(DomainError):
        quartic_ivp_solution(QuarticCoefficients(1.0, 0.0, -1.0 / 3.0, 0.0, 1.0), 0.0, 1.0, Z0)


def test_quartic_ivp_origin_limit():
    assert quartic_ivp_solution(rn_quartic(0.5), 0.0, -0.25, 0j) == 0.0


def test_quartic_ivp_default_context_reproduces_rn():
    # No ctx: the solution is built on the AGM lattice of the quartic invariants.
    sc = sig4_context(HALF)
    q = rn_quartic(0.5)
    for z in (Z0, complex(0.9, -0.4), complex(-1.2, 0.7)):
        expected = rn(sc, z)
        assert abs(quartic_ivp_solution(q, 0.0, -0.25, z) - expected) <= 1e-9 * (1 + abs(expected))


@settings(max_examples=25, deadline=None)
@given(cell_points)
def test_quartic_ivp_general_quartic_residual(z):
    # f has four simple real zeros; start between two of them.
    q = QuarticCoefficients.from_power_coefficients(1.0, 0.2, -1.3, -0.1, 0.25)
    a = 0.0
    A = -math.sqrt(q(a).real)
    ctx = context_from_invariants(quartic_invariants(q))
    try:
        w = quartic_ivp_solution(q, a, A, z, ctx=ctx)
        slope = central_derivative(lambda t: quartic_ivp_solution(q, a, A, t, ctx=ctx), z)
    except PoleError:
        return
    # Stay clear of the poles of w, where the stencil loses accuracy.
    assume(abs(w) < 3.0)
    assert abs(slope**2 - q(w)) <= 1e-8 * (1 + abs(w) ** 4)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
