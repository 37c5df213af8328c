"""
Certification check families for the sigfour certifier.
"""

from sigfour.checks._shared import CheckInput, CheckSpec, Measurement
from sigfour.checks.hypergeometric import hypergeometric_checks
from sigfour.checks.identities import identity_checks
from sigfour.checks.lattice import lattice_checks
from sigfour.checks.ode import ode_checks
from sigfour.checks.periods import period_checks
from sigfour.checks.realline import real_line_checks

# Ordered by catalog number; families keep their internal order.
CATALOG = tuple(
    sorted(
        [
            *hypergeometric_checks,
            *ode_checks,
            *period_checks,
            *lattice_checks,
            *identity_checks,
            *real_line_checks,
        ],
        key=lambda spec: spec.number,
    )
)

__all__ = [
    "CATALOG",
    "CheckInput",
    "CheckSpec",
    "Measurement",
    "hypergeometric_checks",
    "identity_checks",
    "lattice_checks",
    "ode_checks",
    "period_checks",
    "real_line_checks",
]
