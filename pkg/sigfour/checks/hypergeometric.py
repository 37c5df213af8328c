"""
C1: the hypergeometric closed form and the two routes to K.
"""

import logging

import numpy as np

from sigfour.checks._shared import ANALYTIC, CheckInput, CheckSpec, Measurement, grid_measurement
from sigfour.hypergeom import complete_K, complete_K_quadrature, cos_half_ratio, f_half, f_half_series

logger = logging.getLogger(__name__)

CLOSED_FORM_GRID = np.linspace(0.0, 0.96, 50)


def _closed_form(inp: CheckInput) -> Measurement:
    return grid_measurement([abs(f_half(x) - f_half_series(x)) for x in CLOSED_FORM_GRID])


def _trigonometric_form(inp: CheckInput) -> Measurement:
    alpha = inp.sc.modulus.alpha
    return grid_measurement(
        [abs(cos_half_ratio(psi) - f_half(np.sin(psi) ** 2)) for psi in np.linspace(-alpha, alpha, 41)]
    )


def _complete_K(inp: CheckInput) -> Measurement:
    m = inp.sc.modulus
    return grid_measurement([abs(complete_K(m) - complete_K_quadrature(m))])


hypergeometric_checks = [
    CheckSpec(
        "C1.closed_form",
        "F(1/4,3/4;1/2;x) closed form against termwise series on [0, 0.96]",
        1e-4 * ANALYTIC,
        _closed_form,
    ),
    CheckSpec(
        "C1.trigonometric",
        "cos(psi/2)/cos(psi) equals F(1/4,3/4;1/2;sin^2 psi) on [-alpha, alpha]",
        ANALYTIC,
        _trigonometric_form,
    ),
    CheckSpec(
        "C1.complete_K",
        "K by series of F(1/4,3/4;1;kappa^2) against K by quadrature",
        1e-3 * ANALYTIC,
        _complete_K,
    ),
]
