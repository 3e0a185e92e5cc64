"""Deployment problem: scenario container, decision encoding and objectives.

A candidate deployment ("individual") is a flat gene vector of length
4 * uav_count laid out as [x_1..x_U, y_1..y_U, z_1..z_U, p_1..p_U]:
hover positions plus transmit powers. Altitudes are fixed to the scenario
altitude; repair() clamps everything back into its box.

Objectives (all minimized):
    f1  non-uniformity: population variance of the received power over the
        ground receiver grid. Computed on powers expressed in microwatts
        (fixed reporting convention, see MICROWATTS_PER_WATT), a pure scale
        that moves neither minimizers nor orderings.
    f2  leakage: summed eavesdropper rate over all transmitters, bps/Hz.
    f3  motion energy: summed energy to move every UAV from its start
        position to its hover position at cruise speed, J.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from uavlc.channel import RATE_PREFACTOR, VlcParams, gain_matrix
from uavlc.energy import RotorcraftParams, propulsion_power

# the uniformity objective is computed on received powers in microwatts
MICROWATTS_PER_WATT = 1e6


def make_receiver_grid(region, n_per_side: int) -> np.ndarray:
    """Uniform n x n lattice of ground (z = 0) points covering the region.

    The lattice includes the region boundary; points are ordered row-major
    with x varying fastest inside each y row.

    Args:
        region: (x_min, x_max, y_min, y_max) in metres.
        n_per_side: points per side, at least 2.
    """
    x_min, x_max, y_min, y_max = (float(v) for v in region)
    if not (x_min < x_max and y_min < y_max):
        raise ValueError("region must satisfy x_min < x_max and y_min < y_max")
    if n_per_side < 2:
        raise ValueError("n_per_side must be at least 2")
    xs = np.linspace(x_min, x_max, n_per_side)
    ys = np.linspace(y_min, y_max, n_per_side)
    gx, gy = np.meshgrid(xs, ys)  # rows indexed by y, x fastest
    grid = np.column_stack([gx.ravel(), gy.ravel(), np.zeros(n_per_side * n_per_side)])
    grid.setflags(write=False)
    return grid


@dataclass(frozen=True, eq=False)
class Scenario:
    """Immutable description of one deployment problem instance.

    Attributes:
        region: (x_min, x_max, y_min, y_max) service area bounds, m.
        altitude: fixed hover altitude H, m.
        uav_count: number of UAVs U.
        receiver_grid: (N, 3) ground receiver points, z = 0, inside region.
        eavesdropper: (3,) ground eavesdropper position, z = 0.
        start_positions: (U, 3) takeoff hover positions, z = altitude.
        power_bounds: (min, max) transmit power box, W.
        cruise_speed: horizontal repositioning speed, m/s.
        vlc: optical front-end parameters.
        rotor: propulsion model constants.
    """

    region: tuple
    altitude: float
    uav_count: int
    receiver_grid: np.ndarray
    eavesdropper: np.ndarray
    start_positions: np.ndarray
    power_bounds: tuple = (0.1, 10.0)
    cruise_speed: float = 16.0
    vlc: VlcParams = field(default_factory=VlcParams)
    rotor: RotorcraftParams = field(default_factory=RotorcraftParams)

    def __post_init__(self):
        object.__setattr__(self, "region", tuple(float(v) for v in self.region))
        object.__setattr__(self, "power_bounds", tuple(float(v) for v in self.power_bounds))
        grid = np.array(self.receiver_grid, dtype=float)
        eav = np.array(self.eavesdropper, dtype=float).reshape(3)
        starts = np.array(self.start_positions, dtype=float)
        for arr in (grid, eav, starts):
            arr.setflags(write=False)
        object.__setattr__(self, "receiver_grid", grid)
        object.__setattr__(self, "eavesdropper", eav)
        object.__setattr__(self, "start_positions", starts)

        x_min, x_max, y_min, y_max = self.region
        if not (x_min < x_max and y_min < y_max):
            raise ValueError("region must satisfy x_min < x_max and y_min < y_max")
        if self.altitude <= 0.0:
            raise ValueError("altitude must be positive")
        if self.uav_count < 1:
            raise ValueError("uav_count must be at least 1")
        if grid.ndim != 2 or grid.shape[1] != 3 or grid.shape[0] == 0:
            raise ValueError("receiver_grid must be a nonempty (N, 3) array")
        if np.any(grid[:, 2] != 0.0):
            raise ValueError("receiver_grid points must sit on the ground (z = 0)")
        if (
            np.any(grid[:, 0] < x_min)
            or np.any(grid[:, 0] > x_max)
            or np.any(grid[:, 1] < y_min)
            or np.any(grid[:, 1] > y_max)
        ):
            raise ValueError("receiver_grid must lie inside the region")
        if eav[2] != 0.0:
            raise ValueError("eavesdropper must sit on the ground (z = 0)")
        if starts.shape != (self.uav_count, 3):
            raise ValueError("start_positions must have shape (uav_count, 3)")
        if np.any(starts[:, 2] != self.altitude):
            raise ValueError("start_positions must be at the scenario altitude")
        p_min, p_max = self.power_bounds
        if not 0.0 < p_min < p_max:
            raise ValueError("power_bounds must satisfy 0 < min < max")
        if self.cruise_speed <= 0.0:
            raise ValueError("cruise_speed must be positive")

    @property
    def receiver_count(self) -> int:
        return self.receiver_grid.shape[0]

    @property
    def gene_count(self) -> int:
        return 4 * self.uav_count

    @cached_property
    def cruise_power(self) -> float:
        """Propulsion power at cruise speed, W."""
        return propulsion_power(self.cruise_speed, self.rotor)


def _segments(genes, uav_count: int) -> np.ndarray:
    g = np.asarray(genes, dtype=float)
    if g.shape != (4 * uav_count,):
        raise ValueError(f"gene vector must have length {4 * uav_count}")
    return g.reshape(4, uav_count)


def uav_positions(genes, scenario: Scenario) -> np.ndarray:
    """(U, 3) hover positions encoded by a gene vector."""
    x, y, z, _ = _segments(genes, scenario.uav_count)
    return np.column_stack([x, y, z])


def transmit_powers(genes, scenario: Scenario) -> np.ndarray:
    """(U,) transmit powers encoded by a gene vector."""
    return _segments(genes, scenario.uav_count)[3].copy()


def repair(genes, scenario: Scenario) -> np.ndarray:
    """Clamp a gene vector into its box: x/y to the region, z to the
    altitude, powers to the power bounds. Idempotent; returns a new array."""
    seg = _segments(genes, scenario.uav_count).copy()
    x_min, x_max, y_min, y_max = scenario.region
    np.clip(seg[0], x_min, x_max, out=seg[0])
    np.clip(seg[1], y_min, y_max, out=seg[1])
    seg[2] = scenario.altitude
    np.clip(seg[3], scenario.power_bounds[0], scenario.power_bounds[1], out=seg[3])
    return seg.reshape(-1)


def is_feasible(genes, scenario: Scenario) -> bool:
    """True when every gene lies inside its box and z equals the altitude."""
    try:
        seg = _segments(genes, scenario.uav_count)
    except ValueError:
        return False
    x_min, x_max, y_min, y_max = scenario.region
    p_min, p_max = scenario.power_bounds
    return bool(
        np.all(seg[0] >= x_min)
        and np.all(seg[0] <= x_max)
        and np.all(seg[1] >= y_min)
        and np.all(seg[1] <= y_max)
        and np.all(seg[2] == scenario.altitude)
        and np.all(seg[3] >= p_min)
        and np.all(seg[3] <= p_max)
    )


def random_individual(scenario: Scenario, rng: np.random.Generator) -> np.ndarray:
    """Feasible individual with uniform positions and powers.

    Draw order is fixed (x block, y block, power block) so that seeded
    streams reproduce bit-identical individuals.
    """
    x_min, x_max, y_min, y_max = scenario.region
    u = scenario.uav_count
    x = rng.uniform(x_min, x_max, u)
    y = rng.uniform(y_min, y_max, u)
    p = rng.uniform(scenario.power_bounds[0], scenario.power_bounds[1], u)
    return np.concatenate([x, y, np.full(u, float(scenario.altitude)), p])


def received_power_vector(genes, scenario: Scenario) -> np.ndarray:
    """(N,) received power in watts at every grid receiver."""
    seg = _segments(genes, scenario.uav_count)
    positions = np.column_stack([seg[0], seg[1], seg[2]])
    gains = gain_matrix(positions, scenario.receiver_grid, scenario.vlc)
    return (seg[3][:, None] * gains).sum(axis=0)


def average_received_power(genes, scenario: Scenario) -> float:
    """Mean received power over the receiver grid, W."""
    return float(received_power_vector(genes, scenario).mean())


def objective_uniformity(genes, scenario: Scenario) -> float:
    """f1: population variance of the received powers, in microwatts^2."""
    return float(np.var(received_power_vector(genes, scenario) * MICROWATTS_PER_WATT))


def objective_leakage(genes, scenario: Scenario) -> float:
    """f2: summed per-UAV leakage rate toward the eavesdropper, bps/Hz."""
    seg = _segments(genes, scenario.uav_count)
    positions = np.column_stack([seg[0], seg[1], seg[2]])
    gains = gain_matrix(positions, scenario.eavesdropper.reshape(1, 3), scenario.vlc)[:, 0]
    signal = (seg[3] * gains) ** 2
    interference = signal.sum() - signal
    rates = 0.5 * np.log2(1.0 + RATE_PREFACTOR * signal / (interference + scenario.vlc.noise_std))
    return float(rates.sum())


def objective_energy(genes, scenario: Scenario) -> float:
    """f3: summed motion energy from start to hover positions, J."""
    seg = _segments(genes, scenario.uav_count)
    lengths = np.hypot(
        seg[0] - scenario.start_positions[:, 0],
        seg[1] - scenario.start_positions[:, 1],
    )
    return float((scenario.cruise_power * lengths / scenario.cruise_speed).sum())


def evaluate(genes, scenario: Scenario) -> np.ndarray:
    """Objective vector (f1, f2, f3) of one individual.

    Pure and deterministic: identical inputs give bit-identical outputs.
    Callers must hand in feasible individuals (repair first).
    """
    return np.array(
        [
            objective_uniformity(genes, scenario),
            objective_leakage(genes, scenario),
            objective_energy(genes, scenario),
        ]
    )
