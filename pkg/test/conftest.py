"""
Shared pytest setup: project root on sys.path and common contexts.
"""

import sys
from pathlib import Path

import pytest

# Ensure project root on sys.path so `sigfour` and `ui` can be imported
ROOT_DIR = Path(__file__).resolve().parent.parent
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from sigfour.functions import sig4_context  # noqa: E402
from sigfour.hypergeom import Modulus  # noqa: E402


@pytest.fixture(params=[0.3, 0.5, 0.8], ids=lambda k: f"kappa={k}")
def sc(request):
    """A Sig4Context for each of the default certification moduli."""
    return sig4_context(Modulus(request.param))


@pytest.fixture
def sc_half():
    return sig4_context(Modulus(0.5))
