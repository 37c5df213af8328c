"""
Shared plumbing for the certification checks.

Sample points come from a counter-based splitmix64 stream, so every point is
a pure function of (seed, check id, kappa index, sample index, attempt) and
runs reproduce bit for bit regardless of scheduling:

    key   = splitmix64(seed ^ crc32("<check_id>#<kappa_index>"))
    u_j   = splitmix64(key + (4 (i * 64 + a) + j + 1) * 0x9E3779B97F4A7C15) >> 11, times 2^-53

for coordinate j of attempt a of sample i (all arithmetic mod 2^64).
"""

from __future__ import annotations

import logging
import math
import zlib
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

import numpy as np

from sigfour.errors import IterationLimit
from sigfour.functions import Sig4Context
from sigfour.report import ANALYTIC, FINITE_DIFFERENCE, LATTICE_SUM, SamplingConfig  # noqa: F401
from sigfour.weierstrass import WeierstrassContext

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_ATTEMPTS = 64
_UNIT = 2.0**-53


def splitmix64(x: int) -> int:
    """The splitmix64 finalizer on a 64-bit integer."""
    z = x & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_key(seed: int, check_id: str, kappa_index: int) -> int:
    return splitmix64(seed ^ zlib.crc32(f"{check_id}#{kappa_index}".encode("utf-8")))


def uniform(key: int, sample: int, attempt: int, coordinate: int) -> float:
    """A float in [0, 1) with 53 random bits."""
    counter = 4 * (sample * MAX_ATTEMPTS + attempt) + coordinate + 1
    return (splitmix64((key + counter * GOLDEN_GAMMA) & MASK64) >> 11) * _UNIT


def sample_cell(ctx: WeierstrassContext, key: int, count: int, exclusion: float) -> List[complex]:
    """
    Points uniform in [-omega, omega) x [-|omega'|, |omega'|) of ctx's lattice,
    each at least exclusion * 2 omega away from every congruent of
    0, omega, omega' and omega + omega'.
    """
    omega = ctx.omega
    mag = ctx.half_periods.omega_prime_mag
    radius = exclusion * 2.0 * omega
    specials = (0j, complex(omega), ctx.omega_prime, omega + ctx.omega_prime)
    points = []
    for i in range(count):
        for attempt in range(MAX_ATTEMPTS):
            z = complex(
                -omega + 2.0 * omega * uniform(key, i, attempt, 0),
                -mag + 2.0 * mag * uniform(key, i, attempt, 1),
            )
            if all(abs(ctx.reduce(z - s)[0]) >= radius for s in specials):
                points.append(z)
                break
        else:
            raise IterationLimit(f"no admissible sample after {MAX_ATTEMPTS} attempts (sample {i})")
    return points


def max_residual(values: Iterable[float]) -> float:
    """Largest residual; NaN anywhere makes the whole result NaN."""
    array = np.fromiter(values, dtype=float)
    return float(np.max(array)) if array.size else 0.0


@dataclass(frozen=True)
class Measurement:
    samples: int
    residual: float


@dataclass(frozen=True)
class CheckInput:
    """What a check sees: the contexts for one kappa plus its own sample stream."""

    sc: Sig4Context
    config: SamplingConfig
    key: int

    @property
    def kappa(self) -> float:
        return self.sc.kappa

    def points(self, count: Optional[int] = None, ctx: Optional[WeierstrassContext] = None) -> List[complex]:
        """Sample points in the cell of ctx (default: the rn lattice)."""
        count = self.config.samples_per_check if count is None else min(count, self.config.samples_per_check)
        return sample_cell(ctx or self.sc.ctx_P, self.key, count, self.config.pole_exclusion_radius)

    def sweep(self, f: Callable[[complex], float], count: Optional[int] = None, ctx: Optional[WeierstrassContext] = None) -> Measurement:
        points = self.points(count, ctx)
        return Measurement(len(points), max_residual(f(z) for z in points))


@dataclass(frozen=True)
class CheckSpec:
    """One certification check: an id such as "C5.recip", a tier and a measurement."""

    check_id: str
    description: str
    tier: float
    measure: Callable[[CheckInput], Measurement]

    @property
    def number(self) -> int:
        return int(self.check_id[1:].split(".", 1)[0])


def grid_measurement(values: List[float]) -> Measurement:
    return Measurement(len(values), max_residual(values))


def indicator(ok: bool) -> float:
    """0 for a satisfied qualitative property, infinity otherwise."""
    return 0.0 if ok else math.inf


def relative(error: complex, *scales: complex) -> float:
    """|error| / (1 + sum of |scales|)."""
    return abs(error) / (1.0 + sum(abs(s) for s in scales))


def pair_distance(a: Tuple[float, ...], b: Tuple[float, ...]) -> float:
    return max(abs(x - y) for x, y in zip(a, b))
