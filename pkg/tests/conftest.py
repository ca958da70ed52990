"""Shared fixtures: a session-wide cache for expensive trajectory solves."""

import pytest

from cdice import solve_bau, solve_optimal


@pytest.fixture(scope="session")
def solved():
    """Memoized access to BAU/optimal solves keyed by preset and options."""
    cache = {}

    def get(scenario, preset, **kwargs):
        key = (scenario, preset, tuple(sorted(kwargs.items())))
        if key not in cache:
            fn = solve_bau if scenario == "bau" else solve_optimal
            cache[key] = fn(preset, **kwargs)
        return cache[key]

    return get
