"""Run configuration: YAML parsing, defaults, validation, serialization.

A run configuration is a YAML file with up to five sections (scenario,
vlc, rotor, algorithm, run), each optional, unknown keys rejected. Every
physical field has a default, so an empty file is a valid desk
configuration. Values are stored exactly as configured (e.g. noise in dB);
conversion to model units happens in build_scenario, which also validates
everything by actually constructing the scenario and parameter objects.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, fields

import numpy as np
import yaml

from uavlc.channel import VlcParams
from uavlc.cicm import CicmParams
from uavlc.energy import RotorcraftParams
from uavlc.moead import OptimizerParams
from uavlc.problem import Scenario, make_receiver_grid


class ConfigError(ValueError):
    """Invalid run configuration (parse failure, unknown key, bad value)."""


@dataclass(frozen=True)
class ScenarioConfig:
    region: tuple = (0.0, 8.0, 0.0, 8.0)
    altitude: float = 8.0
    uav_count: int = 8
    grid_per_side: int = 80
    eavesdropper: tuple | None = None  # (x, y); default: 3/4 across the region
    start_positions: tuple | None = None  # ((x, y), ...); default: seeded random
    start_seed: int = 0
    power_bounds: tuple = (0.1, 10.0)
    cruise_speed: float = 16.0


@dataclass(frozen=True)
class VlcConfig:
    semi_angle_half_power: float = 60.0
    fov_semi_angle: float = 60.0
    detector_area: float = 1e-4
    refractive_index: float = 1.5
    noise_db: float = -110.0
    distance_exponent: int = 2


@dataclass(frozen=True)
class RotorConfig:
    blade_profile_power: float = 79.86
    induced_power: float = 88.63
    tip_speed: float = 120.0
    mean_induced_velocity: float = 4.03
    fuselage_drag_ratio: float = 0.6
    rotor_solidity: float = 0.05
    air_density: float = 1.225
    rotor_disc_area: float = 0.503


@dataclass(frozen=True)
class CicmConfig:
    circle_a: float = 0.5
    circle_b: float = 0.2
    mutation_probability: float = 0.5
    mutation_shape: int = 3


@dataclass(frozen=True)
class AlgorithmConfig:
    name: str = "moead-cicm"
    population: int = 50
    iterations: int = 200
    mating_size: int | None = None
    replacement_size: int | None = None
    archive_capacity: int = 500
    cicm: CicmConfig = field(default_factory=CicmConfig)


@dataclass(frozen=True)
class RunBlock:
    seeds: tuple = (1,)
    out_dir: str | None = None


@dataclass(frozen=True)
class RunConfig:
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    vlc: VlcConfig = field(default_factory=VlcConfig)
    rotor: RotorConfig = field(default_factory=RotorConfig)
    algorithm: AlgorithmConfig = field(default_factory=AlgorithmConfig)
    run: RunBlock = field(default_factory=RunBlock)


# the two bundled measurement setups
CASE_PRESETS = {
    1: {"region": (0.0, 8.0, 0.0, 8.0), "altitude": 8.0, "uav_count": 8, "grid_per_side": 80},
    2: {"region": (0.0, 10.0, 0.0, 10.0), "altitude": 8.0, "uav_count": 12, "grid_per_side": 100},
}


def _freeze(value):
    """Recursively turn lists into tuples so configs hash/compare cleanly."""
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    return value


def _build_section(cls, data, section: str):
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"section '{section}' must be a mapping")
    known = {f.name: f for f in fields(cls)}
    unknown = set(data) - set(known)
    if unknown:
        raise ConfigError(f"unknown key '{sorted(unknown)[0]}' in section '{section}'")
    kwargs = {}
    for key, value in data.items():
        if key == "cicm":
            kwargs[key] = _build_section(CicmConfig, value, f"{section}.cicm")
        else:
            kwargs[key] = _freeze(value)
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid section '{section}': {exc}") from exc


def config_from_dict(data: dict | None) -> RunConfig:
    """Validated RunConfig from a parsed mapping (defaults applied)."""
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("configuration root must be a mapping")
    sections = {"scenario": ScenarioConfig, "vlc": VlcConfig, "rotor": RotorConfig,
                "algorithm": AlgorithmConfig, "run": RunBlock}
    unknown = set(data) - set(sections)
    if unknown:
        raise ConfigError(f"unknown top-level section '{sorted(unknown)[0]}'")
    config = RunConfig(**{
        name: _build_section(cls, data.get(name), name) for name, cls in sections.items()
    })
    validate_config(config)
    return config


def parse_config(path) -> RunConfig:
    """Parse and validate a YAML run configuration file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse config file {path}: {exc}") from exc
    return config_from_dict(data)


def config_to_dict(config: RunConfig) -> dict:
    """Plain nested dict of a RunConfig (tuples become lists)."""

    def plain(value):
        if dataclasses.is_dataclass(value) and not isinstance(value, type):
            return {f.name: plain(getattr(value, f.name)) for f in fields(value)}
        if isinstance(value, tuple):
            return [plain(v) for v in value]
        return value

    return plain(config)


def dump_config(config: RunConfig, path) -> None:
    """Serialize the effective configuration; parse_config() inverts this."""
    with open(path, "w", encoding="utf-8") as handle:
        yaml.safe_dump(config_to_dict(config), handle, sort_keys=False)


def apply_case(config: RunConfig, case: int) -> RunConfig:
    """Overlay one of the bundled scenario geometry presets."""
    if case not in CASE_PRESETS:
        raise ConfigError(f"unknown case {case}; expected one of {sorted(CASE_PRESETS)}")
    scenario = dataclasses.replace(config.scenario, **CASE_PRESETS[case])
    return dataclasses.replace(config, scenario=scenario)


def default_eavesdropper(region) -> tuple:
    """Ground eavesdropper three quarters across the region on both axes."""
    x_min, x_max, y_min, y_max = region
    return (x_min + 0.75 * (x_max - x_min), y_min + 0.75 * (y_max - y_min))


def build_scenario(config: RunConfig) -> Scenario:
    """Construct the Scenario a configuration describes (validating it)."""
    sc = config.scenario
    try:
        vlc = VlcParams(
            semi_angle_half_power=config.vlc.semi_angle_half_power,
            fov_semi_angle=config.vlc.fov_semi_angle,
            detector_area=config.vlc.detector_area,
            refractive_index=config.vlc.refractive_index,
            noise_std=10.0 ** (config.vlc.noise_db / 10.0),
            distance_exponent=config.vlc.distance_exponent,
        )
        rotor = RotorcraftParams(**{f.name: getattr(config.rotor, f.name) for f in fields(RotorConfig)})
        grid = make_receiver_grid(sc.region, sc.grid_per_side)
        eav_xy = sc.eavesdropper if sc.eavesdropper is not None else default_eavesdropper(sc.region)
        if sc.start_positions is not None:
            starts = np.array(
                [[float(x), float(y), float(sc.altitude)] for x, y in sc.start_positions]
            )
        else:
            rng = np.random.default_rng(sc.start_seed)
            x = rng.uniform(sc.region[0], sc.region[1], sc.uav_count)
            y = rng.uniform(sc.region[2], sc.region[3], sc.uav_count)
            starts = np.column_stack([x, y, np.full(sc.uav_count, float(sc.altitude))])
        return Scenario(
            region=sc.region,
            altitude=sc.altitude,
            uav_count=sc.uav_count,
            receiver_grid=grid,
            eavesdropper=np.array([float(eav_xy[0]), float(eav_xy[1]), 0.0]),
            start_positions=starts,
            power_bounds=sc.power_bounds,
            cruise_speed=sc.cruise_speed,
            vlc=vlc,
            rotor=rotor,
        )
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid scenario: {exc}") from exc


def build_params(config: RunConfig) -> tuple[OptimizerParams, CicmParams]:
    """Optimizer budget and chaos/mutation knobs from a configuration."""
    a = config.algorithm
    try:
        params = OptimizerParams(
            population_target=a.population,
            iterations=a.iterations,
            mating_size=a.mating_size,
            replacement_size=a.replacement_size,
            archive_capacity=a.archive_capacity,
        )
        cicm = CicmParams(
            circle_a=a.cicm.circle_a,
            circle_b=a.cicm.circle_b,
            mutation_probability=a.cicm.mutation_probability,
            mutation_shape=a.cicm.mutation_shape,
            iterations_total=max(a.iterations, 1),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid algorithm section: {exc}") from exc
    return params, cicm


def validate_config(config: RunConfig) -> None:
    """Raise ConfigError unless the configuration builds cleanly."""
    from uavlc.bench import ALGORITHMS  # local import, bench pulls in config users

    if config.algorithm.name not in ALGORITHMS:
        raise ConfigError(
            f"unknown algorithm '{config.algorithm.name}'; expected one of {ALGORITHMS}"
        )
    if not config.run.seeds:
        raise ConfigError("run.seeds must not be empty")
    for seed in config.run.seeds:
        if not isinstance(seed, int):
            raise ConfigError("run.seeds must be integers")
    build_scenario(config)
    build_params(config)
