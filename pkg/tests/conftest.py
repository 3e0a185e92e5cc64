"""Shared fixtures: small scenarios sized for fast unit runs."""

import numpy as np
import pytest

from uavlc.problem import Scenario, make_receiver_grid


def build_scenario(uav_count=2, n_per_side=4, region=(0.0, 8.0, 0.0, 8.0), altitude=8.0,
                   start_seed=0, **kwargs):
    rng = np.random.default_rng(start_seed)
    x = rng.uniform(region[0], region[1], uav_count)
    y = rng.uniform(region[2], region[3], uav_count)
    starts = np.column_stack([x, y, np.full(uav_count, altitude)])
    return Scenario(
        region=region,
        altitude=altitude,
        uav_count=uav_count,
        receiver_grid=make_receiver_grid(region, n_per_side),
        eavesdropper=np.array([6.0, 6.0, 0.0]),
        start_positions=starts,
        **kwargs,
    )


@pytest.fixture
def micro_scenario():
    """2 UAVs, 16 receivers: the brute-force comparison size."""
    return build_scenario(uav_count=2, n_per_side=4)


@pytest.fixture
def small_scenario():
    """4 UAVs, 25 receivers: cheap enough for optimizer smoke runs."""
    return build_scenario(uav_count=4, n_per_side=5)
