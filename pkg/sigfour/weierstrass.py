"""
The Weierstrass engine.

Builds the two contexts of the theory, P (invariants G2, G3; drives rn) and
p (invariants g2, g3; drives dn2), with half-periods taken from the
hypergeometric period formulas and roots taken from their closed forms.
Evaluates ℘ and ℘' at complex points by lattice reduction, argument halving,
a Laurent series and repeated duplication. Also hosts the quartic-IVP
solution formula and the lattice-sum oracles used for certification.
"""

from __future__ import annotations

import cmath
import functools
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import mpmath as mp
import numpy as np

from sigfour.errors import DomainError, InvalidSquareRoot, PoleError
from sigfour.hypergeom import Modulus, f_one

logger = logging.getLogger(__name__)

POLE_GUARD = 1e-8
LAURENT_TERMS = 40
REDUCTION_RADIUS = 0.4
DENOMINATOR_GUARD = 1e-12

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Invariants:
    """The quadrinvariant g2 and cubinvariant g3 of a ℘-function."""

    g2: float
    g3: float

    @property
    def discriminant(self) -> float:
        return discriminant(self)


def discriminant(inv: Invariants) -> float:
    """g2^3 - 27 g3^2; positive exactly when the cubic has three distinct real roots."""
    return inv.g2**3 - 27.0 * inv.g3**2


@dataclass(frozen=True)
class HalfPeriods:
    """
    Half-periods (omega, omega') of a rectangular lattice.

    omega is real and positive; omega' = i * omega_prime_mag is purely
    imaginary. The fundamental periods are (2 omega, 2 omega').
    """

    omega: float
    omega_prime_mag: float

    def __post_init__(self) -> None:
        if not (self.omega > 0 and self.omega_prime_mag > 0):
            raise DomainError(
                f"half-periods must be positive, got omega={self.omega!r}, "
                f"omega_prime_mag={self.omega_prime_mag!r}"
            )

    @property
    def omega_prime(self) -> complex:
        return complex(0.0, self.omega_prime_mag)

    @property
    def ratio(self) -> complex:
        """omega'/omega, purely imaginary with positive imaginary part."""
        return complex(0.0, self.omega_prime_mag / self.omega)


def _laurent_coefficients(inv: Invariants, count: int) -> Tuple[float, ...]:
    # c[k] multiplies z^(2k-2); c2 = g2/20, c3 = g3/28 and
    # c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m} for k >= 4.
    c = [0.0, 0.0, inv.g2 / 20.0, inv.g3 / 28.0]
    for k in range(4, count + 2):
        acc = math.fsum(c[m] * c[k - m] for m in range(2, k - 1))
        c.append(3.0 * acc / ((2 * k + 1) * (k - 3)))
    return tuple(c[2:])


@dataclass(frozen=True)
class WeierstrassContext:
    """
    Immutable state of one ℘-function: invariants, half-periods and the
    three real midpoint values e1 > e2 > e3 (℘ at omega, omega + omega',
    omega' respectively).
    """

    modulus: Optional[Modulus]
    invariants: Invariants
    half_periods: HalfPeriods
    roots: Tuple[float, float, float]
    label: str = "custom"
    laurent: Tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        e1, e2, e3 = self.roots
        if not e1 > e2 > e3:
            raise DomainError(f"roots must be strictly decreasing, got {self.roots!r}")
        scale = max(1.0, abs(self.invariants.g2), abs(self.invariants.g3))
        if abs(e1 + e2 + e3) > 1e-14 * scale:
            raise DomainError(f"roots must sum to zero, got {self.roots!r}")
        g2_from_roots = -4.0 * (e1 * e2 + e1 * e3 + e2 * e3)
        g3_from_roots = 4.0 * e1 * e2 * e3
        if (
            abs(g2_from_roots - self.invariants.g2) > 1e-13 * scale
            or abs(g3_from_roots - self.invariants.g3) > 1e-13 * scale
        ):
            raise DomainError(
                f"roots {self.roots!r} do not factor 4t^3 - g2 t - g3 for {self.invariants!r}"
            )
        object.__setattr__(self, "laurent", _laurent_coefficients(self.invariants, LAURENT_TERMS))

    @property
    def omega(self) -> float:
        return self.half_periods.omega

    @property
    def omega_prime(self) -> complex:
        return self.half_periods.omega_prime

    @property
    def r_min(self) -> float:
        """Length of the shortest nonzero lattice vector."""
        return 2.0 * min(self.half_periods.omega, self.half_periods.omega_prime_mag)

    def reduce(self, z: complex) -> Tuple[complex, complex]:
        """
        Split z into (z - w, w) with w the lattice point nearest to z.

        Raises:
            DomainError: If z has a non-finite coordinate.
        """
        if not cmath.isfinite(z):
            raise DomainError(f"cannot reduce non-finite point {z!r} to the lattice cell")
        two_omega = 2.0 * self.half_periods.omega
        two_mag = 2.0 * self.half_periods.omega_prime_mag
        m = round(z.real / two_omega)
        n = round(z.imag / two_mag)
        point = complex(m * two_omega, n * two_mag)
        return z - point, point

    def nearest_lattice_point(self, z: complex) -> complex:
        return self.reduce(complex(z))[1]


def _build_context(
    modulus: Optional[Modulus],
    invariants: Invariants,
    half_periods: HalfPeriods,
    roots: Tuple[float, float, float],
    label: str,
) -> WeierstrassContext:
    ctx = WeierstrassContext(modulus, invariants, half_periods, tuple(sorted(roots, reverse=True)), label)
    logger.info(
        "WEIERSTRASS_CONTEXT_BUILT: label=%s, kappa=%s, g2=%r, g3=%r, omega=%r, omega_prime_mag=%r",
        label,
        modulus.kappa if modulus is not None else None,
        invariants.g2,
        invariants.g3,
        half_periods.omega,
        half_periods.omega_prime_mag,
    )
    return ctx


@functools.lru_cache(maxsize=64)
def context_P(m: Modulus) -> WeierstrassContext:
    """
    The context of P: invariants G2 = (1 + 3 kappa^2)/12, G3 = (1 - 9 kappa^2)/216,
    half-periods Omega = pi F(kappa^2), |Omega'| = (pi/sqrt 2) F(1 - kappa^2) with
    F = F(1/4, 3/4; 1; .), midpoint values 1/6, -1/12 + kappa/4, -1/12 - kappa/4.
    """
    k = m.kappa
    k2 = k * k
    invariants = Invariants((1.0 + 3.0 * k2) / 12.0, (1.0 - 9.0 * k2) / 216.0)
    half_periods = HalfPeriods(math.pi * f_one(k2), math.pi / _SQRT2 * f_one(m.lam * m.lam))
    roots = (1.0 / 6.0, -1.0 / 12.0 + 0.25 * k, -1.0 / 12.0 - 0.25 * k)
    return _build_context(m, invariants, half_periods, roots, "P")


@functools.lru_cache(maxsize=64)
def context_p(m: Modulus) -> WeierstrassContext:
    """
    The context of p: invariants g2 = (3 lambda^2 + 1)/3, g3 = (9 lambda^2 - 1)/27,
    half-periods omega = (pi/2) F(kappa^2), |omega'| = (pi/sqrt 2) F(1 - kappa^2),
    midpoint values 1/6 + lambda/2, 1/6 - lambda/2, -1/3.
    """
    lam2 = m.lam * m.lam
    invariants = Invariants((3.0 * lam2 + 1.0) / 3.0, (9.0 * lam2 - 1.0) / 27.0)
    half_periods = HalfPeriods(0.5 * math.pi * f_one(m.kappa * m.kappa), math.pi / _SQRT2 * f_one(lam2))
    roots = (1.0 / 6.0 + 0.5 * m.lam, 1.0 / 6.0 - 0.5 * m.lam, -1.0 / 3.0)
    return _build_context(m, invariants, half_periods, roots, "p")


@functools.lru_cache(maxsize=64)
def context_from_invariants(inv: Invariants, label: str = "custom") -> WeierstrassContext:
    """
    A context for arbitrary invariants with three distinct real roots.

    Roots come from the trigonometric solution of 4t^3 - g2 t - g3 = 0 and
    half-periods from the arithmetic-geometric mean:
    omega = pi / (2 AGM(sqrt(e1 - e3), sqrt(e1 - e2))),
    |omega'| = pi / (2 AGM(sqrt(e1 - e3), sqrt(e2 - e3))).

    Raises:
        DomainError: If g2 <= 0 or the discriminant is not positive.
    """
    if inv.g2 <= 0.0 or discriminant(inv) <= 0.0:
        raise DomainError(
            f"invariants {inv!r} do not define a rectangular lattice "
            f"(need g2 > 0 and g2^3 - 27 g3^2 > 0)"
        )
    radius = math.sqrt(inv.g2 / 3.0)
    cos3 = max(-1.0, min(1.0, 3.0 * math.sqrt(3.0) * inv.g3 / inv.g2**1.5))
    theta = math.acos(cos3) / 3.0
    e1, e2, e3 = sorted(
        (radius * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)), reverse=True
    )
    # Re-centre so the roots sum to zero exactly in floating point.
    shift = (e1 + e2 + e3) / 3.0
    e1, e2, e3 = e1 - shift, e2 - shift, e3 - shift
    omega = math.pi / (2.0 * float(mp.agm(math.sqrt(e1 - e3), math.sqrt(e1 - e2))))
    mag = math.pi / (2.0 * float(mp.agm(math.sqrt(e1 - e3), math.sqrt(e2 - e3))))
    return _build_context(None, inv, HalfPeriods(omega, mag), (e1, e2, e3), label)


def _laurent_pair(coefficients: Tuple[float, ...], w: complex) -> Tuple[complex, complex]:
    s = w * w
    series = 0j
    series_prime = 0j
    # coefficients[j] is c_{j+2}, multiplying s^(j+1) in ℘ and (2j+2) w^(2j+1) in ℘'.
    for j in range(len(coefficients) - 1, -1, -1):
        series = series * s + coefficients[j]
        series_prime = series_prime * s + (2 * j + 2) * coefficients[j]
    return 1.0 / s + series * s, -2.0 / (s * w) + series_prime * w


def _double(x: complex, y: complex, g2: float) -> Tuple[complex, complex]:
    # Tangent-chord law on y^2 = 4x^3 - g2 x - g3.
    slope = (12.0 * x * x - g2) / (2.0 * y)
    x2 = 0.25 * slope * slope - 2.0 * x
    return x2, slope * (x - x2) - y


def wp_pair(ctx: WeierstrassContext, z: complex) -> Tuple[complex, complex]:
    """
    ℘(z) and ℘'(z) from a single evaluation.

    z is reduced to the lattice cell centred at 0 and halved until it lies
    within REDUCTION_RADIUS * r_min of the origin; the Laurent series is
    evaluated there and the duplication law applied once per halving.

    Raises:
        PoleError: If z is within POLE_GUARD of a lattice point.
    """
    z = complex(z)
    reduced, point = ctx.reduce(z)
    if abs(reduced) < POLE_GUARD:
        logger.debug("WP_POLE_GUARD: z=%r within guard of lattice point %r (%s)", z, point, ctx.label)
        raise PoleError(
            f"{ctx.label}-function evaluated within {POLE_GUARD} of lattice point {point!r}",
            nearest=point,
            label="lattice",
        )
    radius = REDUCTION_RADIUS * ctx.r_min
    halvings = 0
    w = reduced
    while abs(w) > radius:
        w *= 0.5
        halvings += 1
    x, y = _laurent_pair(ctx.laurent, w)
    for _ in range(halvings):
        if y == 0:
            raise PoleError(f"duplication hit a lattice point near {z!r}", nearest=point, label="lattice")
        x, y = _double(x, y, ctx.invariants.g2)
    return x, y


def wp(ctx: WeierstrassContext, z: complex) -> complex:
    """℘(z) for the context's invariants."""
    return wp_pair(ctx, z)[0]


def wp_prime(ctx: WeierstrassContext, z: complex) -> complex:
    """℘'(z) for the context's invariants."""
    return wp_pair(ctx, z)[1]


def wp_double_prime(ctx: WeierstrassContext, value: complex) -> complex:
    """℘'' expressed through ℘: 6 ℘^2 - g2/2."""
    return 6.0 * value * value - 0.5 * ctx.invariants.g2


def wp_lattice_sum(ctx: WeierstrassContext, z: complex, cutoff: int = 200) -> complex:
    """
    ℘(z) by the truncated direct sum 1/z^2 + sum'(1/(z-w)^2 - 1/w^2) over
    lattice points w = 2m omega + 2n omega' with |m|, |n| <= cutoff.
    """
    z = complex(z)
    idx = np.arange(-cutoff, cutoff + 1)
    total = 1.0 / (z * z)
    for m in idx:
        w = 2.0 * m * ctx.omega + 2.0 * idx * ctx.omega_prime
        if m == 0:
            w = w[idx != 0]
        total += complex(np.sum(1.0 / (z - w) ** 2 - 1.0 / w**2))
    return total


def eisenstein_invariants(w1: complex, w2: complex, cutoff: int) -> Tuple[complex, complex]:
    """
    (g2, g3) = (60 sum' w^-4, 140 sum' w^-6) over w = 2m w1 + 2n w2, |m|, |n| <= cutoff.

    w1 and w2 are half-periods and may be any non-collinear complex pair.
    """
    if cutoff < 1:
        raise DomainError(f"cutoff must be positive, got {cutoff!r}")
    idx = np.arange(-cutoff, cutoff + 1)
    s4 = 0j
    s6 = 0j
    for m in idx:
        w = 2.0 * m * complex(w1) + 2.0 * idx * complex(w2)
        if m == 0:
            w = w[idx != 0]
        inv2 = 1.0 / (w * w)
        inv4 = inv2 * inv2
        s4 += complex(np.sum(inv4))
        s6 += complex(np.sum(inv4 * inv2))
    return 60.0 * s4, 140.0 * s6


def lattice_invariants_oracle(hp: HalfPeriods, cutoff: int = 300) -> Invariants:
    """
    Invariants of the lattice (2 omega, 2 omega') by truncated Eisenstein sums.

    Raises:
        DomainError: If cutoff < 50.
    """
    if cutoff < 50:
        raise DomainError(f"lattice_invariants_oracle needs cutoff >= 50, got {cutoff!r}")
    g2, g3 = eisenstein_invariants(hp.omega, hp.omega_prime, cutoff)
    logger.debug("LATTICE_INVARIANTS: cutoff=%d, g2=%r, g3=%r", cutoff, g2, g3)
    return Invariants(g2.real, g3.real)


@dataclass(frozen=True)
class QuarticCoefficients:
    """f(z) = a0 z^4 + 4 a1 z^3 + 6 a2 z^2 + 4 a3 z + a4."""

    a0: float
    a1: float
    a2: float
    a3: float
    a4: float

    def __post_init__(self) -> None:
        if not any((self.a0, self.a1, self.a2, self.a3, self.a4)):
            raise DomainError("quartic coefficients must not all vanish")

    @classmethod
    def from_power_coefficients(cls, c4: float, c3: float, c2: float, c1: float, c0: float) -> "QuarticCoefficients":
        """From f(z) = c4 z^4 + c3 z^3 + c2 z^2 + c1 z + c0."""
        return cls(c4, c3 / 4.0, c2 / 6.0, c1 / 4.0, c0)

    def power_coefficients(self) -> Tuple[float, float, float, float, float]:
        """(c0, c1, c2, c3, c4), lowest degree first."""
        return (self.a4, 4.0 * self.a3, 6.0 * self.a2, 4.0 * self.a1, self.a0)

    def derivatives(self, z: complex) -> Tuple[complex, complex, complex, complex, complex]:
        """(f, f', f'', f''', f'''') at z."""
        a0, a1, a2, a3, a4 = self.a0, self.a1, self.a2, self.a3, self.a4
        f0 = (((a0 * z + 4 * a1) * z + 6 * a2) * z + 4 * a3) * z + a4
        f1 = ((4 * a0 * z + 12 * a1) * z + 12 * a2) * z + 4 * a3
        f2 = (12 * a0 * z + 24 * a1) * z + 12 * a2
        f3 = 24 * a0 * z + 24 * a1
        f4 = 24 * a0
        return f0, f1, f2, f3, f4

    def __call__(self, z: complex) -> complex:
        return self.derivatives(z)[0]


def quartic_invariants(q: QuarticCoefficients) -> Invariants:
    """
    g2 = a0 a4 - 4 a1 a3 + 3 a2^2,
    g3 = a0 a2 a4 + 2 a1 a2 a3 - a2^3 - a0 a3^2 - a1^2 a4.
    """
    a0, a1, a2, a3, a4 = q.a0, q.a1, q.a2, q.a3, q.a4
    g2 = a0 * a4 - 4.0 * a1 * a3 + 3.0 * a2 * a2
    g3 = a0 * a2 * a4 + 2.0 * a1 * a2 * a3 - a2**3 - a0 * a3 * a3 - a1 * a1 * a4
    return Invariants(g2, g3)


def quartic_ivp_solution(
    q: QuarticCoefficients,
    a: float,
    A: float,
    z: complex,
    ctx: Optional[WeierstrassContext] = None,
) -> complex:
    """
    The solution of (w')^2 = f(w), w(0) = a, in Weierstrassian form:

        w = a + (A ℘' + f'(a)/2 [℘ - f''(a)/24] + f(a) f'''(a)/24)
                / (2 [℘ - f''(a)/24]^2 - f(a) f''''(a)/48)

    with ℘ built on the quartic's own invariants.

    Args:
        q: The quartic f; its zeros must be simple.
        a: Initial value w(0).
        A: A square root of f(a); it selects the branch, w'(0) = -A.
        z: Evaluation point.
        ctx: Optional prebuilt context; defaults to context_from_invariants.

    Raises:
        DomainError: If f has a repeated zero or ctx has other invariants.
        InvalidSquareRoot: If A^2 differs from f(a).
        PoleError: At poles of w.
    """
    inv = quartic_invariants(q)
    scale = max(1.0, abs(inv.g2) ** 1.5, abs(inv.g3))
    if abs(discriminant(inv)) <= 1e-14 * scale * scale:
        raise DomainError(f"quartic {q!r} has a repeated zero (vanishing discriminant)")
    fa, f1, f2, f3, f4 = (complex(v).real for v in q.derivatives(a))
    if abs(A * A - fa) > 1e-12 * max(1.0, abs(fa)):
        logger.debug("QUARTIC_INVALID_ROOT: A=%r, f(a)=%r", A, fa)
        raise InvalidSquareRoot(f"A={A!r} is not a square root of f(a)={fa!r}")
    if ctx is None:
        ctx = context_from_invariants(inv)
    elif abs(ctx.invariants.g2 - inv.g2) > 1e-12 * scale or abs(ctx.invariants.g3 - inv.g3) > 1e-12 * scale:
        raise DomainError(f"context invariants {ctx.invariants!r} do not match the quartic's {inv!r}")

    z = complex(z)
    reduced, point = ctx.reduce(z)
    if abs(reduced) < POLE_GUARD:
        # ℘ dominates: w -> a with slope -A.
        return a - A * reduced

    value, derivative = wp_pair(ctx, z)
    shifted = value - f2 / 24.0
    numerator = A * derivative + 0.5 * f1 * shifted + fa * f3 / 24.0
    denominator = 2.0 * shifted * shifted - fa * f4 / 48.0
    if abs(denominator) < DENOMINATOR_GUARD * (1.0 + abs(numerator)):
        raise PoleError(f"quartic IVP solution has a pole near {z!r}", nearest=z, label="pole")
    return a + numerator / denominator
