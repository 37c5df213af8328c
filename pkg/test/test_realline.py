"""
Test script for sigfour/realline.py
Real-line construction by quadrature and inversion.
"""

import logging
import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigfour.hypergeom import Modulus, complete_K
from sigfour.realline import defining_integral, phi, psi, quarter_period, rn_real_derivative, sig4_real

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

HALF = Modulus(0.5)


def test_phi_at_origin_and_quarter_period():
    assert phi(0.0, HALF) == 0.0
    K = complete_K(HALF)
    assert phi(K, HALF) == pytest.approx(math.pi / 2, abs=1e-11)
    assert phi(2 * K, HALF) == pytest.approx(math.pi, abs=1e-11)


def test_quarter_period_matches_series_K():
    assert quarter_period(HALF) == pytest.approx(complete_K(HALF), abs=1e-11)


def test_defining_integral_against_mpmath():
    k2 = mp.mpf(0.25)
    expected = mp.quad(lambda t: mp.hyp2f1(0.25, 0.75, 0.5, k2 * mp.sin(t) ** 2), [0, 0.9])
    assert defining_integral(0.9, HALF) == pytest.approx(float(expected), abs=1e-12)


def test_defining_integral_period_reduction():
    K = quarter_period(HALF)
    assert defining_integral(0.4 + math.pi, HALF) == pytest.approx(defining_integral(0.4, HALF) + 2 * K, abs=1e-12)
    assert defining_integral(-0.4, HALF) == pytest.approx(-defining_integral(0.4, HALF), abs=1e-15)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=-4.0, max_value=4.0))
def test_phi_inverts_defining_integral(u):
    assert defining_integral(phi(u, HALF), HALF) == pytest.approx(u, abs=1e-11)


def test_phi_is_odd_and_quasi_periodic():
    K = complete_K(HALF)
    assert phi(-0.7, HALF) == pytest.approx(-phi(0.7, HALF), abs=1e-15)
    assert phi(0.7 + 2 * K, HALF) == pytest.approx(phi(0.7, HALF) + math.pi, abs=1e-11)


def test_sig4_values_identities():
    m = Modulus(0.8)
    values = sig4_real(0.42, m)
    assert values.sn2**2 + values.cn2**2 == pytest.approx(1.0, abs=1e-15)
    assert values.dn2**2 + m.kappa**2 * values.sn2**2 == pytest.approx(1.0, abs=1e-14)
    assert values.dn2 == pytest.approx(1 - 2 * values.rn**2, abs=1e-14)


def test_psi_range():
    m = Modulus(0.3)
    K = complete_K(m)
    assert psi(K, m) == pytest.approx(m.alpha, abs=1e-11)
    assert abs(psi(1.1, m)) <= m.alpha


def test_psi_changes_sign_over_half_period():
    m = Modulus(0.5)
    K = quarter_period(m)
    assert abs(psi(0.7 + 2 * K, m) + psi(0.7, m)) <= 1e-11


def test_phi_against_independent_inversion():
    m = Modulus(0.8)
    with mp.workdps(30):
        k2 = mp.mpf(m.kappa) ** 2

        def integral(T):
            return mp.quad(lambda t: mp.hyp2f1(0.25, 0.75, 0.5, k2 * mp.sin(t) ** 2), [0, T])

        oracle = mp.findroot(lambda T: integral(T) - mp.mpf("0.5"), (mp.mpf("0.3"), mp.mpf("0.7")), solver="anderson")
    assert abs(phi(0.5, m) - float(oracle)) <= 1e-11


def test_rn_real_derivative_against_difference():
    m = Modulus(0.5)
    h = 1e-4
    numeric = (sig4_real(0.6 + h, m).rn - sig4_real(0.6 - h, m).rn) / (2 * h)
    assert rn_real_derivative(0.6, m) == pytest.approx(numeric, abs=1e-8)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
