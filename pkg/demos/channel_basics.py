"""Walk through the optical link model with a single hovering transmitter.

Prints the Lambertian order, the gain roll-off with horizontal offset,
the hard field-of-view cutoff, and the received power and leakage rate
for a tiny two-transmitter fleet.

Usage:
    python3 demos/channel_basics.py [--altitude 8.0] [--power 1.0]
"""

import argparse

import numpy as np

from uavlc.channel import (
    VlcParams,
    channel_gain,
    eavesdropper_rate,
    lambert_order,
    total_received_power,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--altitude", type=float, default=8.0, help="hover height in m")
    parser.add_argument("--power", type=float, default=1.0, help="transmit power in W")
    args = parser.parse_args()

    params = VlcParams()
    order = lambert_order(params.semi_angle_half_power)
    print(f"Lambertian order for a {params.semi_angle_half_power:.0f} deg "
          f"half-power semi-angle: m = {order:.3f}")
    print(f"field of view: {params.fov_semi_angle:.0f} deg, "
          f"detector area: {params.detector_area * 1e4:.1f} cm^2")
    print()

    h = args.altitude
    tx = np.array([0.0, 0.0, h])
    print(f"channel gain vs horizontal offset at altitude {h:g} m")
    print(f"{'offset m':>10} {'gain':>12} {'uW received':>12}")
    reach = h * np.tan(np.radians(params.fov_semi_angle))
    for offset in (0.0, 2.0, 4.0, 8.0, 12.0, reach - 0.01, reach + 0.01):
        rx = np.array([offset, 0.0, 0.0])
        gain = channel_gain(tx, rx, params)
        note = "  <- outside the field of view" if gain == 0.0 else ""
        print(f"{offset:>10.2f} {gain:>12.3e} {args.power * gain * 1e6:>12.4f}{note}")
    print(f"(the cutoff sits at {reach:.2f} m for this geometry)")
    print()

    fleet = np.array([[2.0, 2.0, h], [6.0, 6.0, h]])
    powers = np.full(2, args.power)
    ground = np.array([4.0, 4.0, 0.0])
    eve = np.array([6.0, 6.0, 0.0])
    received = total_received_power(fleet, powers, ground, params)
    print(f"two transmitters at (2,2) and (6,6), {args.power:g} W each:")
    print(f"  received at the grid center (4,4): {received * 1e6:.4f} uW")
    for k in range(2):
        rate = eavesdropper_rate(k, fleet, powers, eve, params)
        print(f"  leakage rate of transmitter {k} toward (6,6): {rate:.4f} bit/s/Hz")


if __name__ == "__main__":
    main()
