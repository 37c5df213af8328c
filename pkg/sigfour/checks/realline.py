"""
C12: the Weierstrass closed forms against the real-line construction by
quadrature and inversion, on 64 evenly spaced points of [-2K, 2K].
"""

import functools
import logging
from typing import Tuple

import numpy as np

from sigfour.checks._shared import ANALYTIC, CheckInput, CheckSpec, Measurement, grid_measurement
from sigfour.functions import cn2, dn2, rn
from sigfour.hypergeom import Modulus, complete_K
from sigfour.realline import Sig4Values, sig4_real

logger = logging.getLogger(__name__)

REAL_LINE_POINTS = 64


@functools.lru_cache(maxsize=16)
def real_line_table(m: Modulus) -> Tuple[Tuple[float, Sig4Values], ...]:
    K = complete_K(m)
    grid = np.linspace(-2.0 * K, 2.0 * K, REAL_LINE_POINTS)
    logger.debug("REAL_LINE_TABLE: kappa=%r, points=%d", m.kappa, REAL_LINE_POINTS)
    return tuple((float(u), sig4_real(float(u), m)) for u in grid)


def _against_real_line(function, field: str):
    def measure(inp: CheckInput) -> Measurement:
        sc = inp.sc
        return grid_measurement(
            [abs(function(sc, u) - getattr(values, field)) for u, values in real_line_table(sc.modulus)]
        )

    return measure


real_line_checks = [
    CheckSpec("C12.rn", "rn by the P closed form against sin(psi/2) by inversion", ANALYTIC, _against_real_line(rn, "rn")),
    CheckSpec("C12.cn2", "cn2 = (2/kappa) rn' against cos(phi) by inversion", ANALYTIC, _against_real_line(cn2, "cn2")),
    CheckSpec("C12.dn2", "dn2 = 1 - 2 rn^2 against cos(psi) by inversion", ANALYTIC, _against_real_line(dn2, "dn2")),
]
