"""
Test script for sigfour/functions.py
rn and its companions, shift formulas, classification and the Chebyshev link.
"""

import logging
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigfour.checks.realline import real_line_table
from sigfour.errors import PoleError
from sigfour.functions import (
    Dn2Path,
    PointKind,
    Representative,
    Shift,
    Sig4Context,
    chebyshev_residual,
    chebyshev_t4,
    classify,
    cn2,
    dn2,
    dn2_midpoints,
    rn,
    rn_prime,
    rn_second_order_residual,
    rn_squared,
    shift_value,
    sig4_context,
    sn2_squared,
    solve_rn_unit_point,
)
from sigfour.hypergeom import Modulus
from sigfour.numerics import central_derivative
from sigfour.realline import rn_real_derivative, sig4_real

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

# Small region around the origin, clear of every pole of rn for kappa in [0.3, 0.8].
near_origin = st.builds(complex, st.floats(-0.9, 0.9), st.floats(-0.9, 0.9))


def quartic_residual(sc, z):
    value = rn(sc, z)
    slope = rn_prime(sc, z)
    return abs(slope**2 - (value**4 - value**2 + sc.kappa**2 / 4)) / (1 + abs(value) ** 4)


def test_rn_at_origin(sc):
    assert rn(sc, 0j) == 0
    assert rn_prime(sc, 0j) == pytest.approx(sc.kappa / 2)
    assert dn2(sc, 0j) == 1
    assert cn2(sc, 0j) == pytest.approx(1.0)
    assert sn2_squared(sc, 0j) == 0


def test_rn_matches_real_line(sc_half):
    assert abs(rn(sc_half, 0.4) - sig4_real(0.4, sc_half.modulus).rn) <= 1e-9


def test_rn_pole_at_omega_plus_omega_prime(sc_half):
    with pytest.raises(PoleError) as info:
        rn(sc_half, sc_half.Omega + sc_half.Omega_prime)
    assert info.value.label == Representative.OMEGA_PLUS_OMEGA_PRIME.value


def test_rn_pole_at_congruent_of_omega_prime(sc_half):
    with pytest.raises(PoleError):
        rn(sc_half, sc_half.Omega_prime + 2 * sc_half.Omega)


def test_rn_prime_examples():
    sc = sig4_context(Modulus(0.5))
    z = complex(0.3, 0.1)
    assert abs(central_derivative(lambda w: rn(sc, w), z, h=1e-5) - rn_prime(sc, z)) <= 1e-6
    assert quartic_residual(sig4_context(Modulus(0.8)), 0.7) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(near_origin)
def test_rn_quartic_ode(z):
    assert quartic_residual(Sig4Context.from_kappa(0.5), z) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(near_origin)
def test_rn_odd_and_coperiodic(z):
    sc = Sig4Context.from_kappa(0.8)
    value = rn(sc, z)
    scale = 1 + abs(value)
    assert abs(rn(sc, -z) + value) <= 1e-10 * scale
    assert abs(rn(sc, z + 2 * sc.Omega) - value) <= 1e-9 * scale
    assert abs(rn(sc, z + 2 * sc.Omega_prime) - value) <= 1e-9 * scale
    assert abs(rn(sc, z + sc.Omega) + value) <= 1e-9 * scale


def test_omega_is_not_a_period(sc):
    z = complex(0.3, 0.1)
    assert abs(rn(sc, z + sc.Omega) - rn(sc, z)) > 0.01


def test_rn_squared_examples(sc_half):
    assert abs(rn_squared(sc_half, sc_half.Omega)) <= 1e-12
    z = complex(0.3, 0.2)
    assert abs(rn_squared(sc_half, z) - rn(sc_half, z) ** 2) <= 1e-10
    assert abs(rn_squared(sc_half, z + sc_half.Omega_prime) * rn_squared(sc_half, z) - 0.0625) <= 1e-9


def test_dn2_examples(sc):
    assert dn2(sc, 0j, Dn2Path.VIA_P) == 1
    at_omega, at_corner = dn2_midpoints(sc)
    assert abs(at_omega - sc.modulus.lam) <= 1e-9
    assert abs(at_corner + sc.modulus.lam) <= 1e-9
    z = complex(0.25, 0.3)
    assert abs(dn2(sc, z, Dn2Path.VIA_RN) - dn2(sc, z, Dn2Path.VIA_P)) <= 1e-9


def test_dn2_pole_at_omega_prime(sc_half):
    with pytest.raises(PoleError):
        dn2(sc_half, sc_half.omega_prime)
    near = sc_half.omega_prime + 1e-4
    assert abs(dn2(sc_half, near, Dn2Path.VIA_P)) > 1e5


def test_dn2_periods(sc):
    z = complex(0.3, 0.1)
    assert abs(dn2(sc, z + sc.Omega) - dn2(sc, z)) <= 1e-9
    assert abs(dn2(sc, z + sc.Omega_prime) - dn2(sc, z)) > 0.01


def test_dn2_ode_residual(sc_half):
    lam2 = sc_half.modulus.lam ** 2
    z = complex(0.4, -0.3)
    value = dn2(sc_half, z)
    slope = central_derivative(lambda w: dn2(sc_half, w), z)
    assert abs(slope**2 - 2 * (1 - value) * (value**2 - lam2)) <= 1e-6


def test_cn2_identities():
    sc = sig4_context(Modulus(0.5))
    z = complex(0.2, 0.1)
    assert abs(0.25 * cn2(sc, z) ** 2 - (dn2(sc, z) ** 2 - 0.75)) <= 1e-9
    sc8 = sig4_context(Modulus(0.8))
    assert abs(cn2(sc8, 0.3 + sc8.Omega) + cn2(sc8, 0.3)) <= 1e-9


def test_cn2_matches_real_derivative():
    m = Modulus(0.5)
    sc = sig4_context(m)
    assert abs(cn2(sc, 0.9) - 2 / m.kappa * rn_real_derivative(0.9, m)) <= 1e-9


def test_sn2_squared_examples():
    m = Modulus(0.8)
    sc = sig4_context(m)
    assert abs(sn2_squared(sc, 0.42) - sig4_real(0.42, m).sn2 ** 2) <= 1e-9
    z = complex(0.3, 0.2)
    assert abs(dn2(sc, z) ** 2 + m.kappa**2 * sn2_squared(sc, z) - 1) <= 1e-9
    assert abs(cn2(sc, z) ** 2 + sn2_squared(sc, z) - 1) <= 1e-9


def test_shift_value_examples(sc_half):
    z = complex(0.3, 0.1)
    assert abs(shift_value(sc_half, z, Shift.OMEGA) + rn(sc_half, z)) <= 1e-10
    assert abs(shift_value(sc_half, 0.3, Shift.OMEGA_PRIME) * rn(sc_half, 0.3) - 0.25) <= 1e-9
    w = complex(0.2, 0.1)
    direct = rn(sc_half, w + sc_half.Omega + sc_half.Omega_prime)
    assert abs(shift_value(sc_half, w, Shift.OMEGA_PLUS_OMEGA_PRIME) - direct) <= 1e-9 * (1 + abs(direct))


def test_shift_value_pole(sc_half):
    with pytest.raises(PoleError):
        shift_value(sc_half, 0j, Shift.OMEGA_PRIME)


def test_classify_examples(sc_half):
    origin = classify(sc_half, 0j)
    assert (origin.kind, origin.order, origin.representative) == (PointKind.ZERO, 1, Representative.ORIGIN)
    pole = classify(sc_half, sc_half.Omega_prime + 2 * sc_half.Omega)
    assert (pole.kind, pole.order, pole.representative) == (PointKind.POLE, 1, Representative.OMEGA_PRIME)
    assert classify(sc_half, complex(0.3, 0.2)).kind is PointKind.REGULAR
    assert classify(sc_half, -sc_half.Omega).representative is Representative.OMEGA


def test_chebyshev(sc):
    assert chebyshev_t4(1.0) == 1.0
    assert chebyshev_t4(math.cos(0.3)) == pytest.approx(math.cos(1.2), abs=1e-14)
    assert chebyshev_residual(sc, 0j) <= 1e-12
    assert chebyshev_residual(sc, complex(0.1, 0.05)) <= 1e-8
    assert chebyshev_residual(sc, 0.2) <= 1e-8


def test_unit_point_is_a_simple_zero(sc):
    point = solve_rn_unit_point(sc)
    value = rn(sc, point)
    assert abs(value**2 - 1) <= 1e-8
    derivative = abs(rn_prime(sc, point) * (2 * value - 4 * value**3))
    assert derivative == pytest.approx(sc.kappa, abs=1e-6)
    assert derivative >= sc.kappa / 2


def test_closed_forms_match_real_line_grid(sc):
    # 64 points on [-2K, 2K], every kappa in the default certification list.
    table = real_line_table(sc.modulus)
    assert len(table) == 64
    for u, values in table:
        assert abs(rn(sc, u) - values.rn) <= 1e-9
        assert abs(dn2(sc, u) - values.dn2) <= 1e-9
        assert abs(cn2(sc, u) - values.cn2) <= 1e-9


def test_second_order_equation(sc_half):
    assert rn_second_order_residual(sc_half, complex(0.5, 0.4)) <= 1e-5


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
