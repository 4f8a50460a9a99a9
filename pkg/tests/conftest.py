import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from idealspaces import DEFAULT_SUITE_EXPRS, parse_ring_expression

_ring_cache = {}


def get_ring(expr):
    if expr not in _ring_cache:
        _ring_cache[expr] = parse_ring_expression(expr)
    return _ring_cache[expr]


@pytest.fixture
def ring():
    return get_ring


@pytest.fixture(scope="session")
def suite_rings():
    return [get_ring(e) for e in DEFAULT_SUITE_EXPRS]


@pytest.fixture(scope="session")
def small_rings():
    """Suite rings tiny enough for the exponential oracles."""
    return [get_ring(e) for e in DEFAULT_SUITE_EXPRS if get_ring(e).size <= 16]
