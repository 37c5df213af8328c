"""
Test script for sigfour/hypergeom.py
Closed form, termwise series and the complete integral K against mpmath.
"""

import logging
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigfour.errors import DomainError, SlowConvergence
from sigfour.hypergeom import (
    Modulus,
    complete_K,
    complete_K_quadrature,
    cos_half_ratio,
    f_half,
    f_half_series,
    f_one,
    hyp2f1_series,
)

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


def test_modulus_fields():
    m = Modulus(0.6)
    assert m.lam == pytest.approx(0.8, abs=1e-15)
    assert math.sin(m.alpha) == pytest.approx(0.6, abs=1e-15)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5, float("nan"), float("inf")])
def test_modulus_rejects_outside_open_interval(bad):
    with pytest.raises(DomainError, match=r"\(0, 1\)"):
        Modulus(bad)


def test_modulus_complementary_round_trip():
    m = Modulus(0.3)
    assert m.complementary().lam == pytest.approx(0.3, abs=1e-15)
    assert Modulus.from_lambda(0.8).kappa == pytest.approx(0.6, abs=1e-15)


def test_f_half_values():
    assert f_half(0.0) == 1.0
    assert f_half(0.64) == pytest.approx(0.5 * (1 / math.sqrt(1.8) + 1 / math.sqrt(0.2)), abs=1e-15)


def test_f_half_closed_form_matches_series_grid():
    for x in np.linspace(0.0, 0.96, 50):
        assert abs(f_half(x) - f_half_series(x)) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.95))
def test_f_half_against_mpmath(x):
    assert abs(f_half(x) - float(mp.hyp2f1(0.25, 0.75, 0.5, x))) <= 1e-13


def test_f_half_domain():
    with pytest.raises(DomainError):
        f_half(1.0)
    with pytest.raises(DomainError):
        f_half(-0.1)


def test_cos_half_ratio_matches_f_half():
    for psi in np.linspace(-1.2, 1.2, 25):
        assert cos_half_ratio(psi) == pytest.approx(f_half(math.sin(psi) ** 2), rel=1e-14)


@pytest.mark.parametrize("x", [0.0, 0.09, 0.25, 0.64, 0.99])
def test_f_one_against_mpmath(x):
    assert f_one(x) == pytest.approx(float(mp.hyp2f1(0.25, 0.75, 1, x)), rel=1e-14)


def test_f_one_slow_convergence_guard():
    with pytest.raises(SlowConvergence):
        f_one(0.9995)


def test_f_one_guard_includes_the_limit():
    with pytest.raises(SlowConvergence):
        f_one(0.999)
    assert f_one(0.998) == pytest.approx(float(mp.hyp2f1(0.25, 0.75, 1, 0.998)), rel=1e-12)


def test_hyp2f1_series_general_parameters():
    assert hyp2f1_series(0.5, 0.5, 1.0, 0.3) == pytest.approx(float(mp.hyp2f1(0.5, 0.5, 1, 0.3)), rel=1e-15)


@pytest.mark.parametrize("kappa", [0.3, 0.5, 0.8])
def test_complete_K_two_routes(kappa):
    m = Modulus(kappa)
    assert abs(complete_K(m) - complete_K_quadrature(m)) <= 1e-11


def test_complete_K_against_mpmath_integral():
    m = Modulus(0.5)
    k2 = mp.mpf(0.25)
    expected = mp.quad(lambda t: mp.hyp2f1(0.25, 0.75, 0.5, k2 * mp.sin(t) ** 2), [0, mp.pi / 2])
    assert complete_K(m) == pytest.approx(float(expected), rel=1e-13)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
