"""
Gauss hypergeometric evaluations for signature four.

Only two parameter sets are needed by the theory: (1/4, 3/4; 1/2), whose
closed form drives the real-line construction, and (1/4, 3/4; 1), which gives
the complete integral K and every period. A high-precision termwise
summation is kept beside the production paths as an independent oracle.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import mpmath as mp

from sigfour.errors import DomainError, IterationLimit, SlowConvergence
from sigfour.numerics import DEFAULT_TOLERANCE, ToleranceSpec, integrate_adaptive

logger = logging.getLogger(__name__)

SERIES_REL_STOP = 1e-17
SERIES_MAX_TERMS = 10**6
F_ONE_LIMIT = 0.999


@dataclass(frozen=True)
class Modulus:
    """
    The modulus kappa with its complementary modulus and modular angle.

    `lam` is lambda = sqrt(1 - kappa^2) and `alpha` is the acute angle with
    kappa = sin(alpha), lambda = cos(alpha).
    """

    kappa: float
    lam: float = field(init=False)
    alpha: float = field(init=False)

    def __post_init__(self) -> None:
        kappa = self.kappa
        if isinstance(kappa, bool) or not isinstance(kappa, (int, float)):
            raise DomainError(f"kappa must be a real number, got {kappa!r}")
        kappa = float(kappa)
        if not (math.isfinite(kappa) and 0.0 < kappa < 1.0):
            raise DomainError(f"kappa must lie in the open interval (0, 1), got {kappa!r}")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "lam", math.sqrt((1.0 - kappa) * (1.0 + kappa)))
        object.__setattr__(self, "alpha", math.asin(kappa))

    @classmethod
    def from_lambda(cls, lam: float) -> "Modulus":
        """Build the modulus whose complementary modulus is `lam`."""
        if not (math.isfinite(lam) and 0.0 < lam < 1.0):
            raise DomainError(f"lambda must lie in the open interval (0, 1), got {lam!r}")
        return cls(math.sqrt((1.0 - lam) * (1.0 + lam)))

    def complementary(self) -> "Modulus":
        """The modulus lambda, whose complement is kappa."""
        return Modulus(self.lam)


def _check_unit_interval(x: float, name: str) -> float:
    x = float(x)
    if not (math.isfinite(x) and 0.0 <= x < 1.0):
        raise DomainError(f"{name} requires 0 <= x < 1, got {x!r}")
    return x


def f_half(x: float) -> float:
    """
    F(1/4, 3/4; 1/2; x) through its closed form.

    With z = sqrt(x), F(1/4, 3/4; 1/2; z^2) = [(1 + z)^(-1/2) + (1 - z)^(-1/2)] / 2.

    Raises:
        DomainError: For x outside [0, 1).
    """
    x = _check_unit_interval(x, "f_half")
    z = math.sqrt(x)
    return 0.5 * (1.0 / math.sqrt(1.0 + z) + 1.0 / math.sqrt(1.0 - z))


def cos_half_ratio(psi: float) -> float:
    """cos(psi/2) / cos(psi), which equals f_half(sin(psi)^2) for |psi| < pi/2."""
    return math.cos(0.5 * psi) / math.cos(psi)


def hyp2f1_series(
    a: float,
    b: float,
    c: float,
    x: float,
    dps: int = 40,
    rel_stop: float = 1e-20,
    max_terms: int = SERIES_MAX_TERMS,
) -> float:
    """
    Termwise Gauss 2F1 summation at raised working precision.

    Terms follow the ratio recurrence t_{n+1} = t_n (a+n)(b+n) x / ((c+n)(n+1))
    and summation stops once |t_n| < rel_stop * |partial sum|.

    Args:
        a, b, c: Hypergeometric parameters (c not a non-positive integer).
        x: Argument in [0, 1).
        dps: Decimal digits of working precision.
        rel_stop: Relative stopping threshold.
        max_terms: Term cap.

    Returns:
        The sum rounded to a float.
    """
    x = _check_unit_interval(x, "hyp2f1_series")
    with mp.workdps(dps):
        a_, b_, c_, x_ = mp.mpf(a), mp.mpf(b), mp.mpf(c), mp.mpf(x)
        stop = mp.mpf(rel_stop)
        term = mp.mpf(1)
        total = mp.mpf(1)
        for n in range(max_terms):
            term *= (a_ + n) * (b_ + n) * x_ / ((c_ + n) * (n + 1))
            total += term
            if abs(term) < stop * abs(total):
                logger.debug("HYP2F1_SERIES_CONVERGED: x=%r, terms=%d", x, n + 1)
                return float(total)
    raise IterationLimit(f"2F1({a}, {b}; {c}; {x}) series did not converge in {max_terms} terms")


def f_half_series(x: float) -> float:
    """F(1/4, 3/4; 1/2; x) by high-precision termwise summation (oracle path)."""
    return hyp2f1_series(0.25, 0.75, 0.5, x)


def f_one(x: float) -> float:
    """
    F(1/4, 3/4; 1; x) by direct series summation.

    Summation stops when |term| < 1e-17 * |partial sum|; the terms are added
    with math.fsum.

    Raises:
        DomainError: For x outside [0, 1).
        SlowConvergence: For x >= 0.999, where c - a - b = 0 makes the series
            diverge logarithmically at 1.
    """
    x = _check_unit_interval(x, "f_one")
    if x >= F_ONE_LIMIT:
        raise SlowConvergence(
            f"f_one({x!r}) is too close to the logarithmic singularity at 1 "
            f"(limit {F_ONE_LIMIT})"
        )
    terms = [1.0]
    term = 1.0
    partial = 1.0
    for n in range(SERIES_MAX_TERMS):
        term *= (0.25 + n) * (0.75 + n) * x / ((1.0 + n) * (1.0 + n))
        terms.append(term)
        partial += term
        if term < SERIES_REL_STOP * partial:
            return math.fsum(terms)
    raise IterationLimit(f"f_one({x!r}) series did not converge in {SERIES_MAX_TERMS} terms")


def complete_K(m: Modulus) -> float:
    """The complete integral K = (pi/2) F(1/4, 3/4; 1; kappa^2)."""
    return 0.5 * math.pi * f_one(m.kappa * m.kappa)


def complete_K_quadrature(m: Modulus, tol: ToleranceSpec = DEFAULT_TOLERANCE) -> float:
    """K by adaptive quadrature of its defining integral over [0, pi/2]."""
    k2 = m.kappa * m.kappa
    return integrate_adaptive(lambda t: f_half(k2 * math.sin(t) ** 2), 0.0, 0.5 * math.pi, tol)
