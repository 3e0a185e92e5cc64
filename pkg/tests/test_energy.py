"""Propulsion power and motion energy tests."""

import math

import numpy as np
import pytest

from uavlc.energy import RotorcraftParams, motion_energy, propulsion_power

R = RotorcraftParams()


def one_line_power(v, p=R):
    """Independent scalar re-evaluation used as the oracle throughout."""
    return (
        p.blade_profile_power * (1 + 3 * v**2 / p.tip_speed**2)
        + p.induced_power * math.sqrt(math.sqrt(1 + v**4 / (4 * p.mean_induced_velocity**4)) - v**2 / (2 * p.mean_induced_velocity**2))
        + 0.5 * p.fuselage_drag_ratio * p.air_density * p.rotor_solidity * p.rotor_disc_area * v**3
    )


def test_hover_power_is_exact_sum():
    assert propulsion_power(0.0, R) == R.blade_profile_power + R.induced_power
    assert propulsion_power(0.0, R) == 168.49


def test_power_at_16_matches_scalar_oracle():
    got = propulsion_power(16.0, R)
    want = one_line_power(16.0)
    assert abs(got - want) / want < 1e-12
    assert abs(got - 144.25606293641627) < 1e-9


def test_power_matches_oracle_over_sweep():
    for v in np.linspace(0.0, 40.0, 81):
        want = one_line_power(float(v))
        assert abs(propulsion_power(float(v), R) - want) <= 1e-12 * want


def test_power_has_interior_minimum():
    """The blade term grows, the induced term decays, the parasite term grows
    cubically, so the minimum over [0, 40] sits strictly inside."""
    vs = np.arange(0.0, 40.0 + 1e-9, 0.1)
    powers = np.array([propulsion_power(float(v), R) for v in vs])
    k = int(np.argmin(powers))
    assert 0 < k < len(vs) - 1
    assert powers[k] < propulsion_power(0.0, R)
    assert propulsion_power(40.0, R) > propulsion_power(16.0, R) > powers[k]


def test_power_negative_speed_rejected():
    with pytest.raises(ValueError):
        propulsion_power(-0.1, R)


def test_power_radicand_guard_far_out():
    # at very large V the induced radical cancels catastrophically; the
    # guard keeps the term real instead of raising a math domain error
    assert np.isfinite(propulsion_power(1e4, R))


def test_motion_energy_basics():
    start = (0.0, 0.0, 8.0)
    assert motion_energy(start, (0.0, 0.0, 8.0), 16.0, R) == 0.0
    # 16 m at 16 m/s is one second of cruise
    e = motion_energy(start, (16.0, 0.0, 8.0), 16.0, R)
    assert abs(e - propulsion_power(16.0, R)) < 1e-12
    e5 = motion_energy(start, (3.0, 4.0, 8.0), 16.0, R)
    assert abs(e5 - one_line_power(16.0) * 5.0 / 16.0) / e5 < 1e-12


def test_motion_energy_linear_in_length():
    start = (0.0, 0.0, 8.0)
    e1 = motion_energy(start, (2.0, 0.0, 8.0), 12.0, R)
    e3 = motion_energy(start, (6.0, 0.0, 8.0), 12.0, R)
    assert abs(e3 - 3.0 * e1) / e3 < 1e-12


def test_motion_energy_domain_errors():
    with pytest.raises(ValueError):
        motion_energy((0, 0, 8.0), (1, 0, 9.0), 16.0, R)
    with pytest.raises(ValueError):
        motion_energy((0, 0, 8.0), (1, 0, 8.0), 0.0, R)
    with pytest.raises(ValueError):
        motion_energy((0, 0, 8.0), (1, 0, 8.0), -1.0, R)


def test_params_must_be_positive():
    for name in ("blade_profile_power", "tip_speed", "air_density", "rotor_disc_area"):
        with pytest.raises(ValueError):
            RotorcraftParams(**{name: 0.0})
