"""
Shared real-analysis kernels.

Adaptive quadrature and guarded monotone inversion back the real-line
construction of the signature-four functions (`sigfour.realline`); the
finite-difference stencils back the derivative cross-checks of the
certifier. Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple

from sigfour.errors import BracketError, DomainError, IterationLimit, SubdivisionLimit

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]

# Panels the interval is cut into before adaptive refinement starts.
_INITIAL_PANELS = 4


@dataclass(frozen=True)
class ToleranceSpec:
    """
    Error target and work caps shared by quadrature and inversion.

    Args:
        abs_tol: Absolute error target.
        max_subdivisions: Cap on interval splits in `integrate_adaptive`.
        max_iterations: Cap on steps in `invert_monotone`.
    """

    abs_tol: float = 1e-13
    max_subdivisions: int = 2**16
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise DomainError(f"abs_tol must be positive and finite, got {self.abs_tol!r}")
        if self.max_subdivisions <= 0 or self.max_iterations <= 0:
            raise DomainError(
                "max_subdivisions and max_iterations must be positive, got "
                f"{self.max_subdivisions!r} and {self.max_iterations!r}"
            )

    def tightened(self, factor: float) -> "ToleranceSpec":
        """Return a copy whose abs_tol is divided by `factor`."""
        return ToleranceSpec(self.abs_tol / factor, self.max_subdivisions, self.max_iterations)


DEFAULT_TOLERANCE = ToleranceSpec()


def integrate_adaptive(
    f: RealFunction,
    a: float,
    b: float,
    tol: ToleranceSpec = DEFAULT_TOLERANCE,
) -> float:
    """
    Integrate `f` over [a, b] by adaptive Simpson with Richardson correction.

    Each panel receives a share of `tol.abs_tol` proportional to its width and
    is accepted once the one-level and two-level Simpson estimates agree to
    15 times that share; the accepted value is the Richardson-extrapolated
    two-level estimate.

    Args:
        f: Integrand, continuous on [a, b].
        a: Lower limit.
        b: Upper limit, b >= a.
        tol: Error target and subdivision cap.

    Returns:
        The integral estimate.

    Raises:
        DomainError: If b < a or a limit is not finite.
        SubdivisionLimit: If the subdivision cap is reached first.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integration limits must be finite, got [{a!r}, {b!r}]")
    if b < a:
        raise DomainError(f"integrate_adaptive requires a <= b, got [{a!r}, {b!r}]")
    if a == b:
        return 0.0

    width = b - a
    density = tol.abs_tol / width
    pieces = []
    stack = []

    step = width / _INITIAL_PANELS
    for k in reversed(range(_INITIAL_PANELS)):
        lo = a + k * step
        hi = b if k == _INITIAL_PANELS - 1 else a + (k + 1) * step
        mid = 0.5 * (lo + hi)
        flo, fmid, fhi = f(lo), f(mid), f(hi)
        stack.append((lo, hi, flo, fmid, fhi, (hi - lo) * (flo + 4.0 * fmid + fhi) / 6.0))

    splits = 0
    while stack:
        lo, hi, flo, fmid, fhi, whole = stack.pop()
        mid = 0.5 * (lo + hi)
        left_mid = 0.5 * (lo + mid)
        right_mid = 0.5 * (mid + hi)
        fl, fr = f(left_mid), f(right_mid)
        left = (mid - lo) * (flo + 4.0 * fl + fmid) / 6.0
        right = (hi - mid) * (fmid + 4.0 * fr + fhi) / 6.0
        delta = left + right - whole

        if abs(delta) <= 15.0 * density * (hi - lo) or not (lo < left_mid < mid < right_mid < hi):
            pieces.append(left + right + delta / 15.0)
            continue

        splits += 1
        if splits > tol.max_subdivisions:
            logger.debug(
                "QUADRATURE_SUBDIVISION_LIMIT: Cap reached. interval=[%r, %r], splits=%d",
                a,
                b,
                splits,
            )
            raise SubdivisionLimit(
                f"adaptive quadrature on [{a!r}, {b!r}] exceeded {tol.max_subdivisions} "
                f"subdivisions before reaching abs_tol={tol.abs_tol!r}"
            )
        stack.append((mid, hi, fmid, fr, fhi, right))
        stack.append((lo, mid, flo, fl, fmid, left))

    return math.fsum(pieces)


def invert_monotone(
    g: RealFunction,
    dg: RealFunction,
    target: float,
    bracket: Tuple[float, float],
    tol: ToleranceSpec = DEFAULT_TOLERANCE,
) -> float:
    """
    Solve g(x) = target for strictly increasing g by guarded Newton.

    A Newton step that leaves the current bracket (or a non-positive
    derivative) is replaced by bisection, so the bracket shrinks on every
    iteration and convergence is unconditional.

    Args:
        g: Strictly increasing function on the bracket.
        dg: Its derivative.
        target: Value to reach.
        bracket: (lo, hi) with g(lo) <= target <= g(hi).
        tol: abs_tol on |g(x) - target| and the iteration cap.

    Returns:
        x with |g(x) - target| <= tol.abs_tol (or the best point once the
        bracket has collapsed to machine resolution).

    Raises:
        BracketError: If target lies outside g(bracket).
        IterationLimit: If max_iterations steps do not converge.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if lo > hi:
        lo, hi = hi, lo

    r_lo = g(lo) - target
    if abs(r_lo) <= tol.abs_tol:
        return lo
    r_hi = g(hi) - target
    if abs(r_hi) <= tol.abs_tol:
        return hi
    if r_lo > 0.0 or r_hi < 0.0:
        raise BracketError(
            f"target {target!r} lies outside g([{lo!r}, {hi!r}]) = "
            f"[{r_lo + target!r}, {r_hi + target!r}]"
        )

    # Secant start: exact for affine g.
    x = lo - r_lo * (hi - lo) / (r_hi - r_lo)
    if not lo < x < hi:
        x = 0.5 * (lo + hi)

    for iteration in range(tol.max_iterations):
        r = g(x) - target
        if abs(r) <= tol.abs_tol:
            return x
        if r < 0.0:
            lo = x
        else:
            hi = x
        if hi - lo <= 4.0 * math.ulp(max(abs(lo), abs(hi), 1e-300)):
            logger.debug(
                "INVERT_BRACKET_COLLAPSED: Returning best point. x=%r, residual=%r, iterations=%d",
                x,
                r,
                iteration,
            )
            return x

        slope = dg(x)
        candidate = x - r / slope if slope > 0.0 and math.isfinite(slope) else math.nan
        if not lo < candidate < hi:
            candidate = 0.5 * (lo + hi)
        if candidate == x:
            return x
        x = candidate

    raise IterationLimit(
        f"invert_monotone did not reach abs_tol={tol.abs_tol!r} for target {target!r} "
        f"within {tol.max_iterations} iterations"
    )


def central_derivative(
    f: Callable[[complex], complex],
    z: complex,
    h: float = 1e-3,
    order: int = 1,
) -> complex:
    """
    Fourth-order central finite difference of a complex-valued function.

    Args:
        f: Function of one complex argument, analytic near z.
        z: Evaluation point.
        h: Step along the real direction.
        order: 1 (four-point stencil) or 2 (five-point stencil).

    Returns:
        The derivative estimate, with truncation error O(h^4).
    """
    if order == 1:
        return (f(z - 2 * h) - 8.0 * f(z - h) + 8.0 * f(z + h) - f(z + 2 * h)) / (12.0 * h)
    if order == 2:
        return (
            -f(z - 2 * h) + 16.0 * f(z - h) - 30.0 * f(z) + 16.0 * f(z + h) - f(z + 2 * h)
        ) / (12.0 * h * h)
    raise DomainError(f"central_derivative supports order 1 or 2, got {order!r}")
