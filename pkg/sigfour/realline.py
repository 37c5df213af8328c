"""
The real-line construction of the signature-four functions.

phi is the inverse of the odd increasing bijection
T -> integral_0^T F(1/4, 3/4; 1/2; kappa^2 sin^2 t) dt, psi = arcsin(kappa sin phi),
and sn2 = sin phi, cn2 = cos phi, dn2 = cos psi, rn = sin(psi/2).

Only quadrature and inversion are used here (K included), so these values
are an independent oracle for the Weierstrass path in `sigfour.functions`.
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass

from sigfour.hypergeom import Modulus, f_half
from sigfour.numerics import DEFAULT_TOLERANCE, ToleranceSpec, integrate_adaptive, invert_monotone

logger = logging.getLogger(__name__)

# The quadrature inside the inversion runs this much tighter than the
# inversion itself.
_QUADRATURE_MARGIN = 10.0


@dataclass(frozen=True)
class Sig4Values:
    """sn2, cn2, dn2 and rn at one real argument, from a single phi."""

    sn2: float
    cn2: float
    dn2: float
    rn: float


def _integrand(kappa: float):
    k2 = kappa * kappa
    return lambda t: f_half(k2 * math.sin(t) ** 2)


@functools.lru_cache(maxsize=64)
def _quarter_period(kappa: float, abs_tol: float, max_subdivisions: int) -> float:
    tol = ToleranceSpec(abs_tol, max_subdivisions)
    value = integrate_adaptive(_integrand(kappa), 0.0, 0.5 * math.pi, tol)
    logger.debug("REALLINE_K_COMPUTED: kappa=%r, K=%r", kappa, value)
    return value


def _inner_tolerance(tol: ToleranceSpec) -> ToleranceSpec:
    return tol.tightened(_QUADRATURE_MARGIN)


def quarter_period(m: Modulus, tol: ToleranceSpec = DEFAULT_TOLERANCE) -> float:
    """K by quadrature, at the precision the inversion uses internally."""
    inner = _inner_tolerance(tol)
    return _quarter_period(m.kappa, inner.abs_tol, inner.max_subdivisions)


def defining_integral(T: float, m: Modulus, tol: ToleranceSpec = DEFAULT_TOLERANCE) -> float:
    """
    integral_0^T F(1/4, 3/4; 1/2; kappa^2 sin^2 t) dt for any real T.

    The integrand is even and pi-periodic, so T is first reduced to
    [-pi/2, pi/2) and each whole period contributes 2K.
    """
    inner = _inner_tolerance(tol)
    n = math.floor((T + 0.5 * math.pi) / math.pi)
    reduced = T - n * math.pi
    partial = integrate_adaptive(_integrand(m.kappa), 0.0, abs(reduced), inner)
    return 2.0 * n * quarter_period(m, tol) + math.copysign(partial, reduced)


def phi(u: float, m: Modulus, tol: ToleranceSpec = DEFAULT_TOLERANCE) -> float:
    """
    Invert the defining integral: the phi with integral_0^phi(...) dt = u.

    u is first reduced into [-K, K) with phi(u + 2K) = phi(u) + pi; on that
    range phi lies in [-pi/2, pi/2] and is bracketed by |u| / F(kappa^2) and
    min(|u|, pi/2), since 1 <= F <= F(kappa^2) along the path.
    """
    u = float(u)
    K = quarter_period(m, tol)
    n = math.floor((u + K) / (2.0 * K))
    reduced = u - 2.0 * n * K
    target = abs(reduced)
    if target == 0.0:
        return n * math.pi

    inner = _inner_tolerance(tol)
    integrand = _integrand(m.kappa)
    upper_f = f_half(m.kappa * m.kappa)
    bracket = (target / upper_f, min(target, 0.5 * math.pi))
    root = invert_monotone(
        lambda t: integrate_adaptive(integrand, 0.0, t, inner),
        integrand,
        target,
        bracket,
        tol,
    )
    return math.copysign(root, reduced) + n * math.pi


def psi(u: float, m: Modulus, tol: ToleranceSpec = DEFAULT_TOLERANCE) -> float:
    """The auxiliary function psi = arcsin(kappa sin phi), valued in [-alpha, alpha]."""
    return math.asin(m.kappa * math.sin(phi(u, m, tol)))


def sig4_real(u: float, m: Modulus, tol: ToleranceSpec = DEFAULT_TOLERANCE) -> Sig4Values:
    """All four signature-four functions at a real argument from one phi."""
    angle = phi(u, m, tol)
    sn2 = math.sin(angle)
    cn2 = math.cos(angle)
    aux = math.asin(m.kappa * sn2)
    return Sig4Values(sn2=sn2, cn2=cn2, dn2=math.cos(aux), rn=math.sin(0.5 * aux))


def rn_real_derivative(u: float, m: Modulus, tol: ToleranceSpec = DEFAULT_TOLERANCE) -> float:
    """rn'(u) = (kappa/2) cos phi(u), the analytic real-line derivative."""
    return 0.5 * m.kappa * math.cos(phi(u, m, tol))
