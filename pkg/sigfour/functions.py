"""
The signature-four elliptic functions on the complex plane.

rn is the quotient (kappa/4) P' / ((kappa/4)^2 - (1/12 + P)^2) of the
Weierstrass function P with invariants G2 = (1 + 3 kappa^2)/12 and
G3 = (1 - 9 kappa^2)/216. Its companions follow algebraically:
dn2 = 1 - 2 rn^2, cn2 = (2/kappa) rn', sn2^2 = (4/kappa^2) rn^2 (1 - rn^2).
dn2 has a second closed form through the Weierstrass function p; the
two paths are kept separate so the certifier can compare them.

rn has period lattice (2 Omega, 2 Omega'), simple zeros at 0 and Omega and
simple poles at Omega' and Omega + Omega'.
"""

from __future__ import annotations

import enum
import functools
import logging
import math
from dataclasses import dataclass
from typing import Tuple

from sigfour.errors import PoleError
from sigfour.hypergeom import Modulus
from sigfour.numerics import ToleranceSpec, central_derivative, invert_monotone
from sigfour.weierstrass import (
    DENOMINATOR_GUARD,
    POLE_GUARD,
    WeierstrassContext,
    context_P,
    context_p,
    wp,
    wp_double_prime,
    wp_pair,
)

logger = logging.getLogger(__name__)

CLASSIFY_TOLERANCE = 1e-9
_SQRT8 = math.sqrt(8.0)


class PointKind(str, enum.Enum):
    ZERO = "Zero"
    POLE = "Pole"
    REGULAR = "Regular"


class Representative(str, enum.Enum):
    """The special point of the fundamental cell a classified point is congruent to."""

    ORIGIN = "Origin"
    OMEGA = "Omega"
    OMEGA_PRIME = "OmegaPrime"
    OMEGA_PLUS_OMEGA_PRIME = "OmegaPlusOmegaPrime"
    NONE = "None"

    @property
    def kind(self) -> PointKind:
        if self in (Representative.ORIGIN, Representative.OMEGA):
            return PointKind.ZERO
        if self in (Representative.OMEGA_PRIME, Representative.OMEGA_PLUS_OMEGA_PRIME):
            return PointKind.POLE
        return PointKind.REGULAR


class Shift(str, enum.Enum):
    OMEGA = "Omega"
    OMEGA_PRIME = "OmegaPrime"
    OMEGA_PLUS_OMEGA_PRIME = "OmegaPlusOmegaPrime"


class Dn2Path(str, enum.Enum):
    VIA_RN = "via_rn"
    VIA_P = "via_p"


@dataclass(frozen=True)
class PointClass:
    kind: PointKind
    order: int
    representative: Representative

    def __post_init__(self) -> None:
        if self.kind is not PointKind.REGULAR and self.order != 1:
            raise ValueError(f"zeros and poles of rn are simple, got order {self.order!r}")


@dataclass(frozen=True)
class Sig4Context:
    """
    Everything needed to evaluate the family at one modulus.

    ctx_P carries the rn lattice (2 Omega, 2 Omega') and ctx_p the lattice of
    p, whose half-periods are omega = Omega/2 and omega' = Omega'.
    """

    modulus: Modulus
    ctx_P: WeierstrassContext
    ctx_p: WeierstrassContext

    def __post_init__(self) -> None:
        big, small = self.ctx_P.half_periods, self.ctx_p.half_periods
        if abs(big.omega - 2.0 * small.omega) > 1e-13 * big.omega or abs(
            big.omega_prime_mag - small.omega_prime_mag
        ) > 1e-13 * big.omega_prime_mag:
            raise ValueError(f"P and p contexts disagree on the lattice: {big!r} vs {small!r}")

    @property
    def kappa(self) -> float:
        return self.modulus.kappa

    @property
    def Omega(self) -> float:
        return self.ctx_P.omega

    @property
    def Omega_prime(self) -> complex:
        return self.ctx_P.omega_prime

    @property
    def omega(self) -> float:
        return self.ctx_p.omega

    @property
    def omega_prime(self) -> complex:
        return self.ctx_p.omega_prime

    @classmethod
    def from_kappa(cls, kappa: float) -> "Sig4Context":
        return sig4_context(Modulus(kappa))


@functools.lru_cache(maxsize=64)
def sig4_context(m: Modulus) -> Sig4Context:
    return Sig4Context(m, context_P(m), context_p(m))


def _special_points(sc: Sig4Context) -> Tuple[Tuple[Representative, complex], ...]:
    return (
        (Representative.ORIGIN, 0j),
        (Representative.OMEGA, complex(sc.Omega)),
        (Representative.OMEGA_PRIME, sc.Omega_prime),
        (Representative.OMEGA_PLUS_OMEGA_PRIME, sc.Omega + sc.Omega_prime),
    )


def nearest_special_point(sc: Sig4Context, z: complex) -> Tuple[Representative, float, complex]:
    """
    The special point (congruent to 0, Omega, Omega' or Omega + Omega') closest to z.

    Returns:
        (representative, distance, the congruent point itself).
    """
    z = complex(z)
    best = None
    for rep, base in _special_points(sc):
        offset, point = sc.ctx_P.reduce(z - base)
        distance = abs(offset)
        if best is None or distance < best[1]:
            best = (rep, distance, point + base)
    return best


def classify(sc: Sig4Context, z: complex) -> PointClass:
    """Zero, pole or regular point of rn, up to lattice congruence."""
    rep, distance, _ = nearest_special_point(sc, z)
    if distance > CLASSIFY_TOLERANCE:
        return PointClass(PointKind.REGULAR, 0, Representative.NONE)
    return PointClass(rep.kind, 1, rep)


def _guard_poles(sc: Sig4Context, z: complex) -> None:
    rep, distance, point = nearest_special_point(sc, z)
    if rep.kind is PointKind.POLE and distance < POLE_GUARD:
        logger.debug("RN_POLE_GUARD: z=%r within guard of %s at %r", z, rep.value, point)
        raise PoleError(f"rn has a pole at {point!r} ({rep.value}), z={z!r}", nearest=point, label=rep.value)


def _quotient(sc: Sig4Context, numerator: complex, denominator: complex, z: complex) -> complex:
    if abs(denominator) < DENOMINATOR_GUARD * (1.0 + abs(numerator)):
        rep, _, point = nearest_special_point(sc, z)
        logger.debug("QUOTIENT_POLE_GUARD: z=%r, denominator=%r, nearest=%s", z, denominator, rep.value)
        raise PoleError(
            f"vanishing denominator at z={z!r} (nearest special point {rep.value} at {point!r})",
            nearest=point,
            label=rep.value,
        )
    return numerator / denominator


def _lattice_offset(ctx: WeierstrassContext, z: complex) -> complex | None:
    offset, _ = ctx.reduce(z)
    return offset if abs(offset) < POLE_GUARD else None


def rn(sc: Sig4Context, z: complex) -> complex:
    """
    rn(z) = (kappa/4) P'(z) / ((kappa/4)^2 - (1/12 + P(z))^2).

    At lattice points of P the quotient is replaced by its limit
    (kappa/2) * delta, delta being the offset from the lattice point.

    Raises:
        PoleError: Within the pole guard of a congruent of Omega' or Omega + Omega'.
    """
    z = complex(z)
    delta = _lattice_offset(sc.ctx_P, z)
    if delta is not None:
        return 0.5 * sc.kappa * delta
    _guard_poles(sc, z)
    quarter = 0.25 * sc.kappa
    value, derivative = wp_pair(sc.ctx_P, z)
    shifted = 1.0 / 12.0 + value
    return _quotient(sc, quarter * derivative, quarter * quarter - shifted * shifted, z)


def rn_prime(sc: Sig4Context, z: complex) -> complex:
    """
    rn'(z) by the quotient rule, with P'' = 6 P^2 - G2/2.

    At lattice points of P this is (kappa/2)(1 - delta^2/2).
    """
    z = complex(z)
    delta = _lattice_offset(sc.ctx_P, z)
    if delta is not None:
        return 0.5 * sc.kappa * (1.0 - 0.5 * delta * delta)
    _guard_poles(sc, z)
    quarter = 0.25 * sc.kappa
    value, derivative = wp_pair(sc.ctx_P, z)
    second = wp_double_prime(sc.ctx_P, value)
    shifted = 1.0 / 12.0 + value
    denominator = quarter * quarter - shifted * shifted
    numerator = quarter * second * denominator + 2.0 * quarter * derivative * derivative * shifted
    return _quotient(sc, numerator, denominator * denominator, z)


def rn_squared(sc: Sig4Context, z: complex) -> complex:
    """rn^2 = (kappa^2/4)(P - 1/6) / ((P + 1/12)^2 - (kappa/4)^2), without forming P'."""
    z = complex(z)
    delta = _lattice_offset(sc.ctx_P, z)
    if delta is not None:
        half = 0.5 * sc.kappa * delta
        return half * half
    _guard_poles(sc, z)
    quarter = 0.25 * sc.kappa
    value = wp(sc.ctx_P, z)
    shifted = value + 1.0 / 12.0
    return _quotient(sc, 4.0 * quarter * quarter * (value - 1.0 / 6.0), shifted * shifted - quarter * quarter, z)


def dn2(sc: Sig4Context, z: complex, path: Dn2Path = Dn2Path.VIA_RN) -> complex:
    """
    dn2(z), either as 1 - 2 rn^2 or as 1 - (kappa^2/2) / (1/3 + p(z)).

    Raises:
        PoleError: At congruents of omega' (where p = -1/3).
    """
    z = complex(z)
    path = Dn2Path(path)
    if path is Dn2Path.VIA_RN:
        return 1.0 - 2.0 * rn_squared(sc, z)
    half_k2 = 0.5 * sc.kappa * sc.kappa
    delta = _lattice_offset(sc.ctx_p, z)
    if delta is not None:
        return 1.0 - half_k2 * delta * delta
    return 1.0 - _quotient(sc, half_k2, 1.0 / 3.0 + wp(sc.ctx_p, z), z)


def cn2(sc: Sig4Context, z: complex) -> complex:
    """cn2 = (2/kappa) rn'."""
    return 2.0 / sc.kappa * rn_prime(sc, z)


def sn2_squared(sc: Sig4Context, z: complex) -> complex:
    """sn2^2 = (4/kappa^2) rn^2 (1 - rn^2); elliptic although sn2 itself is not meromorphic."""
    r2 = rn_squared(sc, z)
    return 4.0 / (sc.kappa * sc.kappa) * r2 * (1.0 - r2)


def shift_value(sc: Sig4Context, z: complex, shift: Shift) -> complex:
    """
    rn(z + shift) from the closed shift formulas, without moving the argument:

        rn(z + Omega)           = -rn(z)
        rn(z + Omega')          = P'(z) / (2 (1/6 - P(z)))
        rn(z + Omega + Omega')  = P'(z) / (2 (P(z) - 1/6))

    Raises:
        PoleError: Where the shifted point is a pole of rn.
    """
    shift = Shift(shift)
    z = complex(z)
    if shift is Shift.OMEGA:
        return -rn(sc, z)
    if _lattice_offset(sc.ctx_P, z) is not None:
        point = sc.ctx_P.nearest_lattice_point(z)
        raise PoleError(
            f"rn(z + {shift.value}) has a pole at z={z!r}", nearest=point + _shift_offset(sc, shift), label=shift.value
        )
    value, derivative = wp_pair(sc.ctx_P, z)
    denominator = 1.0 / 6.0 - value if shift is Shift.OMEGA_PRIME else value - 1.0 / 6.0
    return _quotient(sc, 0.5 * derivative, denominator, z + _shift_offset(sc, shift))


def _shift_offset(sc: Sig4Context, shift: Shift) -> complex:
    if shift is Shift.OMEGA:
        return complex(sc.Omega)
    if shift is Shift.OMEGA_PRIME:
        return sc.Omega_prime
    return sc.Omega + sc.Omega_prime


def chebyshev_t4(y: complex) -> complex:
    """The degree-four Chebyshev polynomial 8y^4 - 8y^2 + 1."""
    y2 = y * y
    return 8.0 * y2 * y2 - 8.0 * y2 + 1.0


def chebyshev_residual(sc: Sig4Context, z: complex) -> float:
    """
    |(y')^2 - (T4(y) - (1 - 2 kappa^2))| for y(z) = rn(sqrt(8) z).
    """
    w = _SQRT8 * complex(z)
    y = rn(sc, w)
    slope = _SQRT8 * rn_prime(sc, w)
    return abs(slope * slope - (chebyshev_t4(y) - (1.0 - 2.0 * sc.kappa * sc.kappa)))


def dn2_midpoints(sc: Sig4Context, path: Dn2Path = Dn2Path.VIA_RN) -> Tuple[complex, complex]:
    """(dn2(omega), dn2(omega + omega')), which equal (lambda, -lambda)."""
    return dn2(sc, complex(sc.omega), path), dn2(sc, sc.omega + sc.omega_prime, path)


def solve_rn_unit_point(sc: Sig4Context, tol: ToleranceSpec = ToleranceSpec(abs_tol=1e-14)) -> complex:
    """
    A point where rn^2 = 1.

    On the segment omega' + t, 0 < t < omega, p is real and increases from
    -1/3 to 1/6 - lambda/2; rn^2 = 1 there exactly where
    p = kappa^2/4 - 1/3, which this solves for.
    """
    ctx = sc.ctx_p
    base = ctx.omega_prime
    target = 0.25 * sc.kappa * sc.kappa - 1.0 / 3.0
    t = invert_monotone(
        lambda s: wp(ctx, base + s).real,
        lambda s: wp_pair(ctx, base + s)[1].real,
        target,
        (0.0, ctx.omega),
        tol,
    )
    logger.debug("RN_UNIT_POINT_SOLVED: kappa=%r, t=%r", sc.kappa, t)
    return base + t


def rn_second_order_residual(sc: Sig4Context, z: complex, h: float = 1e-3) -> float:
    """|rn'' - (2 rn^3 - rn)| with rn'' from the five-point stencil."""
    z = complex(z)
    second = central_derivative(lambda w: rn(sc, w), z, h, order=2)
    value = rn(sc, z)
    return abs(second - (2.0 * value**3 - value))
