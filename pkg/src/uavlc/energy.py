"""Rotary-wing propulsion power and horizontal motion energy.

Level-flight propulsion power of a rotary-wing UAV at forward speed V:

    P(V) = P_blade * (1 + 3 V^2 / U_tip^2)
         + P_induced * (sqrt(1 + V^4 / (4 v_0^4)) - V^2 / (2 v_0^2)) ** 0.5
         + 0.5 * d_0 * rho * s * A * V^3

The blade-profile term grows quadratically, the induced term decays from
its hover value, and the parasite term grows cubically, which puts the
power minimum at an interior speed. Hover power is exactly
P_blade + P_induced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RotorcraftParams:
    """Constants of the rotary-wing power model.

    Attributes:
        blade_profile_power: blade profile power in hover, W.
        induced_power: induced power in hover, W.
        tip_speed: rotor blade tip speed, m/s.
        mean_induced_velocity: mean rotor induced velocity in hover, m/s.
        fuselage_drag_ratio: fuselage equivalent flat-plate drag ratio.
        rotor_solidity: rotor solidity (dimensionless).
        air_density: air density, kg/m^3.
        rotor_disc_area: rotor disc area, m^2.

    Defaults are the widely used reference constants for a small
    rotary-wing platform (hover power 79.86 + 88.63 W).
    """

    blade_profile_power: float = 79.86
    induced_power: float = 88.63
    tip_speed: float = 120.0
    mean_induced_velocity: float = 4.03
    fuselage_drag_ratio: float = 0.6
    rotor_solidity: float = 0.05
    air_density: float = 1.225
    rotor_disc_area: float = 0.503

    def __post_init__(self):
        for name in (
            "blade_profile_power",
            "induced_power",
            "tip_speed",
            "mean_induced_velocity",
            "fuselage_drag_ratio",
            "rotor_solidity",
            "air_density",
            "rotor_disc_area",
        ):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")


def propulsion_power(speed: float, params: RotorcraftParams) -> float:
    """Level-flight propulsion power in watts at forward speed in m/s."""
    v = float(speed)
    if v < 0.0:
        raise ValueError("speed must be nonnegative")
    v0 = params.mean_induced_velocity
    blade = params.blade_profile_power * (1.0 + 3.0 * v**2 / params.tip_speed**2)
    # sqrt(1 + a^2) - a >= 0 mathematically; the max() guards fp cancellation
    radicand = max(math.sqrt(1.0 + v**4 / (4.0 * v0**4)) - v**2 / (2.0 * v0**2), 0.0)
    induced = params.induced_power * math.sqrt(radicand)
    parasite = (
        0.5
        * params.fuselage_drag_ratio
        * params.air_density
        * params.rotor_solidity
        * params.rotor_disc_area
        * v**3
    )
    return blade + induced + parasite


def motion_energy(start, end, speed: float, params: RotorcraftParams) -> float:
    """Energy in joules to fly horizontally from start to end at constant speed.

    Energy is propulsion power times travel time L / speed, L being the
    horizontal distance. Only level flight is modelled: the two z
    coordinates must match and speed must be positive.
    """
    if speed <= 0.0:
        raise ValueError("speed must be positive")
    s = np.asarray(start, dtype=float)
    e = np.asarray(end, dtype=float)
    if s[2] != e[2]:
        raise ValueError("motion_energy models level flight only (z mismatch)")
    length = math.hypot(e[0] - s[0], e[1] - s[1])
    return propulsion_power(speed, params) * length / speed
