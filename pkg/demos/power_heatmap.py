"""Optimize one deployment and render its ground power field as SVG.

Runs the chaos-initialized optimizer once at a modest budget, samples the
received power over the receiver grid for the knee solution, and writes
two files: a heatmap of the power field and a scatter of the final
archive in objective space.

Usage:
    python3 demos/power_heatmap.py [--out demo_out] [--seed 1]
"""

import argparse
import dataclasses
from pathlib import Path

import numpy as np

from uavlc.bench import high_quality_area, power_grid, run_experiment
from uavlc.config import RunConfig, apply_case, build_scenario
from uavlc.moead import OptimizerParams
from uavlc.render import heatmap_svg, scatter_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="demo_out", help="output directory")
    parser.add_argument("--seed", type=int, default=1, help="run seed")
    parser.add_argument("--iters", type=int, default=80, help="iteration budget")
    parser.add_argument("--grid", type=int, default=40, help="receiver grid per side")
    args = parser.parse_args()

    config = apply_case(RunConfig(), 1)
    config = dataclasses.replace(
        config, scenario=dataclasses.replace(config.scenario, grid_per_side=args.grid)
    )
    scenario = build_scenario(config)
    budget = OptimizerParams(population_target=30, iterations=args.iters)
    result = run_experiment(scenario, ["moead-cicm"], [args.seed], budget=budget)
    record = result.records[0]

    u = scenario.uav_count
    genes = record.knee_genes
    print(f"knee solution of seed {args.seed}: "
          f"f = ({record.knee_fitness[0]:.4f}, {record.knee_fitness[1]:.4f}, "
          f"{record.knee_fitness[2]:.2f})")
    for i in range(u):
        print(f"  UAV {i}: ({genes[i]:.2f}, {genes[u + i]:.2f}) "
              f"at {genes[2 * u + i]:g} m, {genes[3 * u + i]:.2f} W")

    grid = power_grid(genes, scenario)
    area = high_quality_area(grid)
    print(f"mean received power {grid.values.mean() * 1e6:.4f} uW, "
          f"{area:.2f} m^2 at or above the field mean")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "power_field.svg").write_text(heatmap_svg(grid))
    points = np.asarray(record.archive.fitness)
    (out / "archive_objectives.svg").write_text(scatter_svg(points))
    print(f"wrote {out / 'power_field.svg'} and {out / 'archive_objectives.svg'}")


if __name__ == "__main__":
    main()
