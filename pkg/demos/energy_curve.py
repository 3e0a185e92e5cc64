"""Trace the rotorcraft power curve and what it costs to reposition.

Prints propulsion power over a speed sweep, locates the most efficient
cruise speed on that sweep, and converts a few straight-line hops into
motion energy at the default 16 m/s mission speed.

Usage:
    python3 demos/energy_curve.py [--max-speed 30] [--step 2]
"""

import argparse

import numpy as np

from uavlc.energy import RotorcraftParams, motion_energy, propulsion_power


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-speed", type=float, default=30.0, help="sweep limit in m/s")
    parser.add_argument("--step", type=float, default=2.0, help="sweep step in m/s")
    args = parser.parse_args()

    params = RotorcraftParams()
    hover = propulsion_power(0.0, params)
    print(f"hover power: {hover:.2f} W "
          f"(blade profile {params.blade_profile_power:g} W "
          f"+ induced {params.induced_power:g} W)")
    print()

    speeds = np.arange(0.0, args.max_speed + 1e-9, args.step)
    powers = np.array([propulsion_power(v, params) for v in speeds])
    print(f"{'speed m/s':>10} {'power W':>10}")
    for v, p in zip(speeds, powers):
        marker = "  <- sweep minimum" if p == powers.min() else ""
        print(f"{v:>10.1f} {p:>10.2f}{marker}")
    print()
    print("the curve dips below hover at moderate speed because forward "
          "flight unloads the rotor induced power, then climbs again as "
          "parasite drag takes over")
    print()

    cruise = 16.0
    print(f"straight-line repositioning at {cruise:g} m/s "
          f"({propulsion_power(cruise, params):.2f} W in cruise):")
    hover_alt = 8.0
    for start, end in (((0.0, 0.0), (16.0, 0.0)),
                       ((0.0, 0.0), (3.0, 4.0)),
                       ((2.0, 2.0), (2.0, 2.0))):
        energy = motion_energy((*start, hover_alt), (*end, hover_alt), cruise, params)
        dist = float(np.hypot(end[0] - start[0], end[1] - start[1]))
        print(f"  {start} -> {end}: {dist:6.2f} m, {energy:8.2f} J")


if __name__ == "__main__":
    main()
