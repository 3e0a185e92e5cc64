"""Configuration parsing, presets, scenario building and SVG rendering."""

import numpy as np
import pytest

from uavlc.bench import PowerGrid
from uavlc.config import (
    AlgorithmConfig,
    CicmConfig,
    ConfigError,
    RunBlock,
    RunConfig,
    ScenarioConfig,
    apply_case,
    build_params,
    build_scenario,
    config_from_dict,
    config_to_dict,
    default_eavesdropper,
    dump_config,
    parse_config,
)
from uavlc.render import heatmap_svg, scatter_svg


# ---------------------------------------------------------------- parsing

def test_empty_mapping_yields_all_defaults():
    assert config_from_dict({}) == RunConfig()
    assert config_from_dict(None) == RunConfig()


def test_round_trip_through_yaml(tmp_path):
    config = config_from_dict(
        {
            "scenario": {
                "region": [0.0, 10.0, 0.0, 10.0],
                "uav_count": 12,
                "grid_per_side": 12,
                "eavesdropper": [7.5, 7.5],
                "start_positions": [[1.0, 1.0]] * 12,
                "cruise_speed": 12.5,
            },
            "vlc": {"noise_db": -100.0},
            "algorithm": {
                "name": "moead",
                "population": 10,
                "iterations": 7,
                "cicm": {"circle_b": 0.25},
            },
            "run": {"seeds": [3, 4, 5]},
        }
    )
    path = tmp_path / "round.yaml"
    dump_config(config, path)
    assert parse_config(path) == config


def test_config_dict_inverts_frozen_tuples():
    config = RunConfig()
    data = config_to_dict(config)
    assert data["scenario"]["region"] == [0.0, 8.0, 0.0, 8.0]
    assert data["algorithm"]["cicm"]["circle_a"] == 0.5
    assert config_from_dict(data) == config


def test_unknown_top_level_section_is_named():
    with pytest.raises(ConfigError, match="receivers"):
        config_from_dict({"receivers": {}})


def test_unknown_key_names_key_and_section():
    with pytest.raises(ConfigError, match="grid_pitch.*scenario"):
        config_from_dict({"scenario": {"grid_pitch": 4}})
    with pytest.raises(ConfigError, match="algorithm.cicm"):
        config_from_dict({"algorithm": {"cicm": {"chaos": 1.0}}})


def test_non_mapping_sections_are_rejected():
    with pytest.raises(ConfigError, match="mapping"):
        config_from_dict({"vlc": [1, 2, 3]})
    with pytest.raises(ConfigError, match="mapping"):
        config_from_dict([("vlc", {})])


def test_parse_config_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        parse_config(tmp_path / "absent.yaml")


def test_parse_config_invalid_yaml(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("scenario: [unclosed\n")
    with pytest.raises(ConfigError, match="cannot parse"):
        parse_config(path)


# ---------------------------------------------------------------- validation

def test_unknown_algorithm_name_rejected():
    with pytest.raises(ConfigError, match="unknown algorithm"):
        config_from_dict({"algorithm": {"name": "anneal"}})


def test_seed_list_validation():
    with pytest.raises(ConfigError, match="seeds"):
        config_from_dict({"run": {"seeds": []}})
    with pytest.raises(ConfigError, match="integers"):
        config_from_dict({"run": {"seeds": [1, "two"]}})


def test_bad_scenario_values_surface_as_config_errors():
    with pytest.raises(ConfigError):
        config_from_dict({"scenario": {"uav_count": 0}})
    with pytest.raises(ConfigError):
        config_from_dict({"vlc": {"fov_semi_angle": 0.0}})
    with pytest.raises(ConfigError):
        config_from_dict({"algorithm": {"population": 1}})


# ---------------------------------------------------------------- presets

def test_case_presets_overlay_geometry_only():
    base = config_from_dict({"scenario": {"cruise_speed": 10.0}})
    one = apply_case(base, 1)
    assert one.scenario.region == (0.0, 8.0, 0.0, 8.0)
    assert one.scenario.uav_count == 8
    assert one.scenario.grid_per_side == 80
    assert one.scenario.cruise_speed == 10.0  # non-geometry field survives
    two = apply_case(base, 2)
    assert two.scenario.region == (0.0, 10.0, 0.0, 10.0)
    assert two.scenario.uav_count == 12
    assert two.scenario.grid_per_side == 100
    assert two.scenario.altitude == 8.0


def test_unknown_case_rejected():
    with pytest.raises(ConfigError, match="unknown case"):
        apply_case(RunConfig(), 3)


def test_default_eavesdropper_three_quarters_across():
    assert default_eavesdropper((0.0, 8.0, 0.0, 8.0)) == (6.0, 6.0)
    assert default_eavesdropper((2.0, 6.0, 10.0, 20.0)) == (5.0, 17.5)


# ---------------------------------------------------------------- building

def test_build_scenario_defaults():
    config = config_from_dict({"scenario": {"grid_per_side": 5}})
    sc = build_scenario(config)
    assert sc.uav_count == 8
    assert sc.receiver_count == 25
    assert np.array_equal(sc.eavesdropper, [6.0, 6.0, 0.0])
    assert sc.vlc.noise_std == 1e-11  # -110 dB converted exactly
    assert sc.rotor.blade_profile_power == 79.86


def test_build_scenario_explicit_starts_and_eavesdropper():
    config = config_from_dict(
        {
            "scenario": {
                "uav_count": 2,
                "grid_per_side": 4,
                "eavesdropper": [1.0, 2.0],
                "start_positions": [[3.0, 3.0], [5.0, 5.0]],
            }
        }
    )
    sc = build_scenario(config)
    assert np.array_equal(sc.eavesdropper, [1.0, 2.0, 0.0])
    assert np.array_equal(sc.start_positions, [[3.0, 3.0, 8.0], [5.0, 5.0, 8.0]])


def test_build_scenario_seeded_starts_are_reproducible():
    config = config_from_dict({"scenario": {"uav_count": 3, "grid_per_side": 4, "start_seed": 9}})
    sc = build_scenario(config)
    rng = np.random.default_rng(9)
    x = rng.uniform(0.0, 8.0, 3)
    y = rng.uniform(0.0, 8.0, 3)
    assert np.array_equal(sc.start_positions, np.column_stack([x, y, np.full(3, 8.0)]))
    assert np.array_equal(sc.start_positions, build_scenario(config).start_positions)


def test_build_params_mirrors_algorithm_block():
    config = config_from_dict(
        {"algorithm": {"population": 12, "iterations": 33, "archive_capacity": 44,
                       "cicm": {"mutation_shape": 5}}}
    )
    params, cicm = build_params(config)
    assert params.population_target == 12
    assert params.iterations == 33
    assert params.archive_capacity == 44
    assert cicm.mutation_shape == 5
    assert cicm.iterations_total == 33


def test_build_params_schedule_floor_for_zero_iterations():
    config = config_from_dict({"algorithm": {"iterations": 0}})
    _, cicm = build_params(config)
    assert cicm.iterations_total == 1


def test_nested_blocks_are_dataclasses():
    config = RunConfig(
        scenario=ScenarioConfig(uav_count=2, grid_per_side=4),
        algorithm=AlgorithmConfig(name="moead", cicm=CicmConfig(circle_a=0.4)),
        run=RunBlock(seeds=(2, 3)),
    )
    assert config.algorithm.cicm.circle_a == 0.4
    assert config.run.seeds == (2, 3)


# ---------------------------------------------------------------- rendering

def _tiny_grid(values):
    arr = np.asarray(values, dtype=float)
    return PowerGrid(
        xs=np.linspace(0.0, 8.0, arr.shape[1]),
        ys=np.linspace(0.0, 8.0, arr.shape[0]),
        values=arr,
    )


def test_heatmap_svg_structure_and_determinism():
    grid = _tiny_grid(np.arange(12.0).reshape(3, 4))
    svg = heatmap_svg(grid, width=100)
    assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")
    assert 'width="100"' in svg
    assert svg.count("<rect") == 12
    assert svg == heatmap_svg(grid, width=100)


def test_heatmap_color_ramp_endpoints():
    svg = heatmap_svg(_tiny_grid([[0.0, 1.0]]), width=40)
    assert "#0d0887" in svg  # coldest anchor
    assert "#cc3311" in svg  # hottest anchor


def test_heatmap_draws_small_y_rows_at_the_bottom():
    """Row 0 holds the smallest y; it must be drawn at the largest SVG y."""
    svg = heatmap_svg(_tiny_grid([[0.0, 0.0], [1.0, 1.0]]), width=40)
    rects = [line for line in svg.splitlines() if line.startswith("<rect")]
    hot = [r for r in rects if "#cc3311" in r]
    cold = [r for r in rects if "#0d0887" in r]
    assert all('y="0.00"' in r for r in hot)      # high-y data row on top
    assert all('y="20.00"' in r for r in cold)    # low-y data row below


def test_heatmap_flat_field_does_not_divide_by_zero():
    svg = heatmap_svg(_tiny_grid(np.ones((2, 2))), width=40)
    assert svg.count("<rect") == 4


def test_scatter_svg_three_panels_and_point_count():
    pts = np.array([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [0.5, 0.1, 9.0]])
    svg = scatter_svg(pts)
    assert "f1 vs f2" in svg and "f1 vs f3" in svg and "f2 vs f3" in svg
    assert svg.count("<circle") == 9
    assert svg == scatter_svg(pts)


def test_scatter_svg_handles_empty_and_single_point():
    empty = scatter_svg(np.empty((0, 3)))
    assert empty.count("<circle") == 0
    single = scatter_svg(np.array([1.0, 2.0, 3.0]))
    assert single.count("<circle") == 3


def test_scatter_svg_custom_labels():
    svg = scatter_svg(np.array([[1.0, 2.0, 3.0]]), labels=("u", "v", "w"))
    assert "u vs v" in svg and "v vs w" in svg
