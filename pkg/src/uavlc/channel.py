"""Lambertian line-of-sight optical channel for hovering LED transmitters.

Pure geometry and radiometry for links between downward-facing LEDs carried
by UAVs and upward-facing photodiodes on the ground. The gain of a link at
distance d with irradiance angle phi and incidence angle psi is

    h = (m + 1) * A_r / (2 * pi * d**e) * g(psi) * cos(phi)**m * cos(psi)

with Lambertian order m, detector area A_r, optical concentrator gain g and
distance exponent e (2 for the inverse-square form, 1 for a literal
first-power variant). Because transmitters point straight down and
receivers straight up, cos(phi) = cos(psi) = dz / d.

Positions are (x, y, z) array-likes in metres; angles cross the API in
degrees. Everything here is pure and side-effect free.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# prefactor of the squared-signal term inside the half-log rate expression
RATE_PREFACTOR = np.e / (2.0 * np.pi)


@dataclass(frozen=True)
class VlcParams:
    """Optical front-end parameters shared by every link of a scenario.

    Attributes:
        semi_angle_half_power: transmitter semi-angle at half power, degrees.
        fov_semi_angle: receiver field-of-view semi-angle, degrees. Links
            with incidence angle at or beyond this value have zero gain.
        detector_area: photodiode area, m^2.
        refractive_index: concentrator refractive index (dimensionless).
        noise_std: additive noise term of the rate denominator, linear power.
        distance_exponent: exponent e of the link distance in the gain
            denominator; 2 (inverse square, default) or 1.

    Defaults describe a 60 degree half-angle LED with a 1 cm^2 detector,
    a 1.5-index concentrator and -110 dB noise, the setup used throughout
    the bundled demos.
    """

    semi_angle_half_power: float = 60.0
    fov_semi_angle: float = 60.0
    detector_area: float = 1e-4
    refractive_index: float = 1.5
    noise_std: float = 1e-11
    distance_exponent: int = 2

    def __post_init__(self):
        if not 0.0 < self.semi_angle_half_power < 90.0:
            raise ValueError("semi_angle_half_power must lie in (0, 90) degrees")
        if not 0.0 < self.fov_semi_angle <= 90.0:
            raise ValueError("fov_semi_angle must lie in (0, 90] degrees")
        if self.detector_area <= 0.0:
            raise ValueError("detector_area must be positive")
        if self.refractive_index <= 0.0:
            raise ValueError("refractive_index must be positive")
        if self.noise_std <= 0.0:
            raise ValueError("noise_std must be positive")
        if self.distance_exponent not in (1, 2):
            raise ValueError("distance_exponent must be 1 or 2")


def lambert_order(semi_angle_half_power: float) -> float:
    """Lambertian emission order m = -ln(2) / ln(cos(semi-angle)).

    The order diverges for narrow beams (m(0.1 deg) > 1e5) and decays
    toward zero as the semi-angle approaches 90 degrees; m(60 deg) = 1.

    Args:
        semi_angle_half_power: transmitter semi-angle at half power, degrees,
            strictly inside (0, 90).
    """
    if not 0.0 < semi_angle_half_power < 90.0:
        raise ValueError("semi-angle must lie strictly between 0 and 90 degrees")
    return -np.log(2.0) / np.log(np.cos(np.radians(semi_angle_half_power)))


def link_geometry(transmitter, receiver) -> tuple[float, float]:
    """Euclidean distance and incidence cosine of a vertical-orientation link.

    Returns (d, cos_psi) with cos_psi = dz / d, dz being the transmitter
    height above the receiver. No domain checks: a transmitter below the
    receiver simply yields a negative cosine (out of any field of view).
    """
    delta = np.asarray(transmitter, dtype=float) - np.asarray(receiver, dtype=float)
    d = float(np.sqrt(delta[0] ** 2 + delta[1] ** 2 + delta[2] ** 2))
    return d, float(delta[2] / d)


def concentrator_gain(incidence_angle: float, params: VlcParams) -> float:
    """Optical concentrator gain n^2 / sin^2(fov) for angles inside the FOV.

    Angle-independent inside the field of view, zero at the boundary and
    beyond (the incidence_angle >= fov branch wins ties).

    Args:
        incidence_angle: psi in degrees, 0 <= psi < 180.
    """
    if not 0.0 <= incidence_angle < 180.0:
        raise ValueError("incidence_angle must lie in [0, 180) degrees")
    if incidence_angle >= params.fov_semi_angle:
        return 0.0
    return params.refractive_index**2 / np.sin(np.radians(params.fov_semi_angle)) ** 2


def gain_matrix(transmitters, receivers, params: VlcParams) -> np.ndarray:
    """Channel gain of every transmitter/receiver pair.

    Args:
        transmitters: (U, 3) positions in metres.
        receivers: (N, 3) positions in metres.
        params: optical front-end parameters.

    Returns:
        (U, N) array of nonnegative gains; zero where the incidence angle
        is at or beyond the receiver field of view.
    """
    t = np.atleast_2d(np.asarray(transmitters, dtype=float))
    r = np.atleast_2d(np.asarray(receivers, dtype=float))
    dx = t[:, 0, None] - r[None, :, 0]
    dy = t[:, 1, None] - r[None, :, 1]
    dz = t[:, 2, None] - r[None, :, 2]
    d2 = dx * dx + dy * dy + dz * dz
    d = np.sqrt(d2)
    cos_psi = dz / d

    fov_rad = np.radians(params.fov_semi_angle)
    in_fov = cos_psi > np.cos(fov_rad)  # psi < fov, boundary excluded
    g = params.refractive_index**2 / np.sin(fov_rad) ** 2

    m = lambert_order(params.semi_angle_half_power)
    prefactor = (m + 1.0) * params.detector_area / (2.0 * np.pi)
    denominator = d2 if params.distance_exponent == 2 else d
    cos_safe = np.where(in_fov, cos_psi, 1.0)  # keep pow off negative bases
    h = prefactor * g / denominator * cos_safe ** (m + 1.0)
    return np.where(in_fov, h, 0.0)


def channel_gain(transmitter, receiver, params: VlcParams) -> float:
    """Line-of-sight channel gain of a single link (see module docstring)."""
    t = np.asarray(transmitter, dtype=float).reshape(1, 3)
    r = np.asarray(receiver, dtype=float).reshape(1, 3)
    return float(gain_matrix(t, r, params)[0, 0])


def total_received_power(transmitters, powers, receiver, params: VlcParams, adjust=None) -> float:
    """Received optical power at one point: sum of adjust * gain * power.

    Args:
        transmitters: (U, 3) transmitter positions; U may be zero.
        powers: (U,) transmit powers, W.
        receiver: ground point (x, y, z).
        params: optical front-end parameters.
        adjust: optional (U,) per-link adjust factors in [0, 1]; defaults
            to all ones. Carried through verbatim, never optimized here.
    """
    t = np.asarray(transmitters, dtype=float).reshape(-1, 3)
    p = np.asarray(powers, dtype=float).reshape(-1)
    if t.shape[0] != p.shape[0]:
        raise ValueError("transmitters and powers must have matching length")
    if t.shape[0] == 0:
        return 0.0
    w = np.ones_like(p) if adjust is None else np.asarray(adjust, dtype=float).reshape(-1)
    if w.shape[0] != p.shape[0]:
        raise ValueError("adjust must have one factor per transmitter")
    gains = gain_matrix(t, np.asarray(receiver, dtype=float).reshape(1, 3), params)[:, 0]
    return float(np.sum(w * gains * p))


def _link_rates(transmitters, powers, point, params: VlcParams) -> np.ndarray:
    """Half-log rate of every transmitter toward one point, interference from the rest."""
    t = np.asarray(transmitters, dtype=float).reshape(-1, 3)
    p = np.asarray(powers, dtype=float).reshape(-1)
    if t.shape[0] != p.shape[0]:
        raise ValueError("transmitters and powers must have matching length")
    gains = gain_matrix(t, np.asarray(point, dtype=float).reshape(1, 3), params)[:, 0]
    signal = (p * gains) ** 2
    interference = signal.sum() - signal
    return 0.5 * np.log2(1.0 + RATE_PREFACTOR * signal / (interference + params.noise_std))


def achievable_rate(serving_index: int, transmitters, powers, receiver, params: VlcParams) -> float:
    """Achievable rate (bps/Hz) of one serving link at a receiver point.

    Signal and interference terms enter squared; links with zero gain
    contribute no interference. Raises if the serving link itself has zero
    gain (receiver out of its field of view).
    """
    rates = _link_rates(transmitters, powers, receiver, params)
    gains = gain_matrix(
        np.asarray(transmitters, dtype=float).reshape(-1, 3),
        np.asarray(receiver, dtype=float).reshape(1, 3),
        params,
    )[:, 0]
    if gains[serving_index] == 0.0:
        raise ValueError("serving transmitter cannot reach the receiver (zero gain)")
    return float(rates[serving_index])


def eavesdropper_rate(uav_index: int, transmitters, powers, eavesdropper, params: VlcParams) -> float:
    """Rate leaked from one transmitter to an eavesdropping receiver.

    Same expression as achievable_rate, but an unreachable link leaks
    nothing and returns 0 instead of raising.
    """
    gains = gain_matrix(
        np.asarray(transmitters, dtype=float).reshape(-1, 3),
        np.asarray(eavesdropper, dtype=float).reshape(1, 3),
        params,
    )[:, 0]
    if gains[uav_index] == 0.0:
        return 0.0
    return float(_link_rates(transmitters, powers, eavesdropper, params)[uav_index])
