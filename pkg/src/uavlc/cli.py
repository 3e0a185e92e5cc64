"""Command line front end: parse config, run the experiment, write artifacts.

Output layout (root from --out, $UAVLC_OUT, or ./runs):

    <out>/<case>/<algo>/seed<N>/archive.json     nondominated genes + objectives
    <out>/<case>/<algo>/seed<N>/metrics.csv      per-iteration progress
    <out>/<case>/<algo>/seed<N>/powergrid.csv    knee-point received power map
    <out>/<case>/<algo>/seed<N>/report.csv       knee objectives, area, hypervolume
    <out>/<case>/summary.csv                     per-algorithm means
    <out>/<case>/config.yaml                     effective configuration
    <out>/<case>/experiment.json                 shared metric frame
    <out>/<case>/run.log                         timestamps and wall times

Artifacts never depend on the clock (timestamps go to run.log only), so a
rerun of the same command reproduces byte-identical CSV/JSON files. Exit
codes: 0 ok, 2 configuration problem, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import os
import sys
from pathlib import Path

from uavlc.bench import ALGORITHMS, ExperimentResult, RunRecord, run_experiment
from uavlc.config import (
    ConfigError,
    RunConfig,
    apply_case,
    build_params,
    build_scenario,
    dump_config,
    parse_config,
)
from uavlc.render import heatmap_svg, scatter_svg

log = logging.getLogger("uavlc")

_G = "{:.9g}".format  # 9 significant digits everywhere in CSV output


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uavlc",
        description="Deploy VLC-equipped UAVs over a receiver grid and optimize the deployment.",
    )
    parser.add_argument("--config", required=True, help="path to a YAML run configuration")
    parser.add_argument("--case", type=int, choices=(1, 2), help="bundled scenario geometry preset")
    parser.add_argument("--algo", choices=ALGORITHMS, help="override the configured algorithm")
    seeds = parser.add_mutually_exclusive_group()
    seeds.add_argument("--seed", type=int, help="single run seed")
    seeds.add_argument("--seeds", help="inclusive seed range N..M")
    parser.add_argument("--iters", type=int, help="override the iteration budget")
    parser.add_argument("--pop", type=int, help="override the population size target")
    parser.add_argument("--grid", type=int, help="override receiver grid points per side")
    parser.add_argument("--out", help="output root (default $UAVLC_OUT or ./runs)")
    parser.add_argument(
        "--emit",
        action="append",
        choices=("csv", "json", "svg"),
        help="artifact kinds to write; repeatable; default csv and json",
    )
    parser.add_argument("--jobs", type=int, default=1, help="parallel (algorithm, seed) runs")
    return parser


def _parse_seed_range(text: str) -> tuple[int, ...]:
    first, sep, last = text.partition("..")
    if not sep:
        raise ConfigError("--seeds expects an inclusive range like 1..10")
    try:
        lo, hi = int(first), int(last)
    except ValueError as exc:
        raise ConfigError(f"bad --seeds range {text!r}") from exc
    if hi < lo:
        raise ConfigError("--seeds range must not be empty")
    return tuple(range(lo, hi + 1))


def _effective_config(config: RunConfig, args) -> RunConfig:
    if args.case is not None:
        config = apply_case(config, args.case)
    scenario = config.scenario
    if args.grid is not None:
        scenario = dataclasses.replace(scenario, grid_per_side=args.grid)
    algorithm = config.algorithm
    if args.algo is not None:
        algorithm = dataclasses.replace(algorithm, name=args.algo)
    if args.iters is not None:
        algorithm = dataclasses.replace(algorithm, iterations=args.iters)
    if args.pop is not None:
        algorithm = dataclasses.replace(algorithm, population=args.pop)
    run = config.run
    if args.seed is not None:
        run = dataclasses.replace(run, seeds=(args.seed,))
    elif args.seeds is not None:
        run = dataclasses.replace(run, seeds=_parse_seed_range(args.seeds))
    if args.out is not None:
        run = dataclasses.replace(run, out_dir=args.out)
    return dataclasses.replace(config, scenario=scenario, algorithm=algorithm, run=run)


def _write_csv(path: Path, header: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(header + "\n")
        for row in rows:
            handle.write(",".join(row) + "\n")


def _write_powergrid(path: Path, grid) -> None:
    rows = (
        (_G(x), _G(y), _G(grid.values[iy, ix]))
        for iy, y in enumerate(grid.ys)
        for ix, x in enumerate(grid.xs)
    )
    _write_csv(path, "x,y,power_w", rows)


def _write_metrics(path: Path, metrics) -> None:
    rows = (
        (
            str(m.iteration),
            _G(m.ideal_point[0]),
            _G(m.ideal_point[1]),
            _G(m.ideal_point[2]),
            str(m.archive_size),
            _G(m.mean_fitness[0]),
            _G(m.mean_fitness[1]),
            _G(m.mean_fitness[2]),
        )
        for m in metrics
    )
    _write_csv(
        path,
        "iteration,ideal_f1,ideal_f2,ideal_f3,archive_size,mean_f1,mean_f2,mean_f3",
        rows,
    )


_REPORT_HEADER = "algorithm,seed,f1,f2,f3,area_m2,hypervolume"
_SUMMARY_HEADER = "algorithm,f1,f2,f3,area_m2,hypervolume"


def _write_run_dir(run_dir: Path, record: RunRecord, emit: set[str]) -> None:
    run_dir.mkdir(parents=True, exist_ok=True)
    report = record.report
    if "json" in emit:
        entries = [
            {"genes": [float(v) for v in genes], "f": [float(v) for v in fv]}
            for genes, fv in record.archive.entries()
        ]
        with open(run_dir / "archive.json", "w", encoding="utf-8", newline="\n") as handle:
            json.dump(entries, handle, indent=2)
            handle.write("\n")
    if "csv" in emit:
        _write_metrics(run_dir / "metrics.csv", record.metrics)
        _write_powergrid(run_dir / "powergrid.csv", record.grid)
        _write_csv(
            run_dir / "report.csv",
            _REPORT_HEADER,
            [
                (
                    report.algorithm,
                    str(report.seed),
                    _G(report.f1),
                    _G(report.f2),
                    _G(report.f3),
                    _G(report.area_m2),
                    _G(report.hypervolume),
                )
            ],
        )
        if report.algorithm == "moead-cicm":
            _write_csv(
                run_dir / "init_population.csv",
                ",".join(f"g{i}" for i in range(record.initial_population.shape[1])),
                ([_G(v) for v in row] for row in record.initial_population),
            )
    if "svg" in emit:
        (run_dir / "heatmap.svg").write_text(heatmap_svg(record.grid), encoding="utf-8")
        (run_dir / "scatter.svg").write_text(
            scatter_svg(record.archive.fitness), encoding="utf-8"
        )


def write_artifacts(case_dir: Path, config: RunConfig, result: ExperimentResult, emit: set[str]) -> None:
    case_dir.mkdir(parents=True, exist_ok=True)
    dump_config(config, case_dir / "config.yaml")
    for record in result.records:
        _write_run_dir(case_dir / record.report.algorithm / f"seed{record.report.seed}", record, emit)
    if "csv" in emit:
        _write_csv(
            case_dir / "summary.csv",
            _SUMMARY_HEADER,
            (
                (s.algorithm, _G(s.f1), _G(s.f2), _G(s.f3), _G(s.area_m2), _G(s.hypervolume))
                for s in result.summary
            ),
        )
    if "json" in emit and result.reference_point is not None:
        frame = {
            "reference_point": [float(v) for v in result.reference_point],
            "objective_low": [float(v) for v in result.objective_low],
            "objective_high": [float(v) for v in result.objective_high],
        }
        with open(case_dir / "experiment.json", "w", encoding="utf-8", newline="\n") as handle:
            json.dump(frame, handle, indent=2)
            handle.write("\n")


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code) if exc.code else 0

    try:
        if args.jobs < 1:
            raise ConfigError("--jobs must be at least 1")
        config = _effective_config(parse_config(args.config), args)
        scenario = build_scenario(config)
        params, cicm = build_params(config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    out_root = Path(config.run.out_dir or os.environ.get("UAVLC_OUT") or "runs")
    case_label = f"case{args.case}" if args.case is not None else "custom"
    case_dir = out_root / case_label
    emit = set(args.emit) if args.emit else {"csv", "json"}

    case_dir.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(case_dir / "run.log", encoding="utf-8")
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO)

    try:
        log.info(
            "running %s, seeds %s, %d iterations, grid %d per side, jobs %d",
            config.algorithm.name,
            list(config.run.seeds),
            config.algorithm.iterations,
            config.scenario.grid_per_side,
            args.jobs,
        )
        result = run_experiment(
            scenario,
            [config.algorithm.name],
            list(config.run.seeds),
            budget=params,
            cicm=cicm,
            jobs=args.jobs,
        )
        write_artifacts(case_dir, config, result, emit)
        for record in result.records:
            log.info(
                "%s seed %d finished in %.2f s (knee f = %.6g, %.6g, %.6g)",
                record.report.algorithm,
                record.report.seed,
                record.report.wall_time_s,
                record.report.f1,
                record.report.f2,
                record.report.f3,
            )
        print(f"wrote {case_dir}")
        return 0
    except Exception as exc:  # pragma: no cover - defensive runtime guard
        log.exception("run failed")
        print(f"runtime error: {exc}", file=sys.stderr)
        return 3
    finally:
        log.removeHandler(handler)
        handler.close()


if __name__ == "__main__":
    sys.exit(main())
