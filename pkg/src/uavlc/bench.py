"""Baselines, deployment quality metrics and the experiment harness.

Provides the two non-iterative baselines (random, uniform lattice), the
received-power grid with its high-quality-area measure, an exact
3-objective hypervolume, and run_experiment, which runs a set of
algorithms over a set of seeds and reduces everything into per-run reports
plus per-algorithm summary rows.
"""

from __future__ import annotations

import math
import time
from bisect import bisect_left, bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from uavlc.cicm import CicmParams, run_moead_cicm
from uavlc.moead import MetricsRow, OptimizerParams, ParetoArchive, RunResult, run_moead
from uavlc.problem import Scenario, evaluate, random_individual, received_power_vector

ALGORITHMS = ("moead", "moead-cicm", "random", "uniform")

# equal objective weights of the knee-point pick
_KNEE_WEIGHTS = np.full(3, 1.0 / 3.0)


def random_deployment(scenario: Scenario, seed: int) -> np.ndarray:
    """Feasible individual with seeded uniform positions and powers."""
    return random_individual(scenario, np.random.default_rng(seed))


def uniform_deployment(scenario: Scenario) -> np.ndarray:
    """Deterministic lattice deployment at mid-range power.

    UAVs sit at the cell centers of an r x c partition of the region with
    r = floor(sqrt(U)) rows and c = ceil(U / r) columns; the UAV count must
    fill that lattice exactly (8 -> 2x4, 12 -> 3x4).
    """
    u = scenario.uav_count
    rows = int(math.floor(math.sqrt(u)))
    cols = int(math.ceil(u / rows))
    if rows * cols != u:
        raise ValueError(f"uav_count {u} does not fill a {rows}x{cols} lattice")
    x_min, x_max, y_min, y_max = scenario.region
    cell_w = (x_max - x_min) / cols
    cell_h = (y_max - y_min) / rows
    xs = []
    ys = []
    for r in range(rows):
        for c in range(cols):
            xs.append(x_min + (c + 0.5) * cell_w)
            ys.append(y_min + (r + 0.5) * cell_h)
    power = 0.5 * (scenario.power_bounds[0] + scenario.power_bounds[1])
    return np.concatenate(
        [
            np.array(xs),
            np.array(ys),
            np.full(u, float(scenario.altitude)),
            np.full(u, power),
        ]
    )


@dataclass(frozen=True)
class PowerGrid:
    """Received power sampled on the scenario's receiver lattice.

    values[iy, ix] is the power in watts at (xs[ix], ys[iy]). Each sample
    stands for an equal-area cell of cell_size = span / n per axis (the
    lattice pitch itself is span / (n - 1); the cell convention makes the
    covered areas tile the region exactly).
    """

    xs: np.ndarray
    ys: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        for name in ("xs", "ys", "values"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.values.shape != (self.ys.size, self.xs.size):
            raise ValueError("values must have shape (len(ys), len(xs))")

    @property
    def resolution(self) -> tuple[int, int]:
        return int(self.xs.size), int(self.ys.size)

    @property
    def origin(self) -> tuple[float, float]:
        return float(self.xs[0]), float(self.ys[0])

    @property
    def cell_size(self) -> tuple[float, float]:
        nx, ny = self.resolution
        return (
            float(self.xs[-1] - self.xs[0]) / nx,
            float(self.ys[-1] - self.ys[0]) / ny,
        )

    @property
    def cell_area(self) -> float:
        w, h = self.cell_size
        return w * h


def power_grid(genes, scenario: Scenario) -> PowerGrid:
    """Received power of one deployment over the scenario receiver grid.

    The scenario's receiver points must form a full rectangular lattice
    (as produced by make_receiver_grid); points are rearranged by their
    coordinates, so the stored receiver order does not matter.
    """
    grid = scenario.receiver_grid
    xs = np.unique(grid[:, 0])
    ys = np.unique(grid[:, 1])
    if xs.size * ys.size != grid.shape[0]:
        raise ValueError("receiver grid is not a full rectangular lattice")
    powers = received_power_vector(genes, scenario)
    values = np.zeros((ys.size, xs.size))
    ix = np.searchsorted(xs, grid[:, 0])
    iy = np.searchsorted(ys, grid[:, 1])
    values[iy, ix] = powers
    return PowerGrid(xs=xs, ys=ys, values=values)


def high_quality_area(grid: PowerGrid, threshold: float | None = None) -> float:
    """Area (m^2) of cells whose received power reaches a threshold.

    The default threshold is the grid mean, so a perfectly flat grid
    qualifies everywhere; pass a fixed wattage to override.
    """
    tau = float(grid.values.mean()) if threshold is None else float(threshold)
    return grid.cell_area * int(np.count_nonzero(grid.values >= tau))


def _nondominated_mask(points: np.ndarray) -> np.ndarray:
    """Boolean mask of points not strictly dominated by any other point."""
    n = points.shape[0]
    mask = np.ones(n, dtype=bool)
    for i in range(n):
        if not mask[i]:
            continue
        le = (points <= points[i]).all(axis=1)
        lt = (points < points[i]).any(axis=1)
        if bool(np.any(le & lt)):
            mask[i] = False
    return mask


def hypervolume(points, reference) -> float:
    """Exact dominated hypervolume of 3-objective points (minimization).

    The Lebesgue measure of the union of boxes [point, reference]. Points
    are swept along the third objective while a 2-D staircase tracks the
    union area in the first two; dominated points add nothing and are
    dropped upfront. Every point must be componentwise <= the reference.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[None, :]
    ref = np.asarray(reference, dtype=float).reshape(-1)
    if pts.shape[1] != 3 or ref.shape[0] != 3:
        raise ValueError("hypervolume supports exactly 3 objectives")
    if pts.shape[0] == 0:
        return 0.0
    if bool(np.any(pts > ref)):
        raise ValueError("every point must dominate the reference point")
    pts = pts[_nondominated_mask(pts)]
    order = np.argsort(pts[:, 2], kind="stable")
    pts = pts[order]

    stair_x: list[float] = []  # ascending
    stair_y: list[float] = []  # descending, same indexing
    ref_x, ref_y, ref_z = (float(v) for v in ref)

    def area() -> float:
        total = 0.0
        for k, y in enumerate(stair_y):
            right = stair_x[k + 1] if k + 1 < len(stair_x) else ref_x
            total += (right - stair_x[k]) * (ref_y - y)
        return total

    volume = 0.0
    current_area = 0.0
    prev_z: float | None = None
    for x, y, z in pts:
        if prev_z is not None and z > prev_z:
            volume += current_area * (z - prev_z)
            prev_z = z
        if prev_z is None:
            prev_z = z
        j = bisect_right(stair_x, x) - 1
        if j >= 0 and stair_y[j] <= y:
            continue  # already covered in 2-D
        i = bisect_left(stair_x, x)
        while i < len(stair_x) and stair_y[i] >= y:
            del stair_x[i]
            del stair_y[i]
        stair_x.insert(i, float(x))
        stair_y.insert(i, float(y))
        current_area = area()
    volume += current_area * (ref_z - prev_z)
    return volume


@dataclass
class RunReport:
    """Knee-point quality figures of one (algorithm, seed) run."""

    algorithm: str
    seed: int
    f1: float
    f2: float
    f3: float
    area_m2: float
    hypervolume: float
    wall_time_s: float


@dataclass
class SummaryRow:
    """Per-algorithm means over all seeds."""

    algorithm: str
    f1: float
    f2: float
    f3: float
    area_m2: float
    hypervolume: float


@dataclass
class RunRecord:
    """Report plus the artifacts a front end may want to serialize."""

    report: RunReport
    archive: ParetoArchive
    metrics: list[MetricsRow]
    knee_genes: np.ndarray
    knee_fitness: np.ndarray
    grid: PowerGrid
    initial_population: np.ndarray
    initial_fitness: np.ndarray


@dataclass
class ExperimentResult:
    """All runs of one experiment plus the shared metric frame."""

    records: list[RunRecord] = field(default_factory=list)
    summary: list[SummaryRow] = field(default_factory=list)
    reference_point: np.ndarray | None = None
    objective_low: np.ndarray | None = None
    objective_high: np.ndarray | None = None

    @property
    def ideal_point(self) -> np.ndarray | None:
        """Joint ideal point: componentwise minimum over all final archives."""
        return self.objective_low


def _single_solution_result(genes: np.ndarray, scenario: Scenario, capacity: int) -> RunResult:
    fv = evaluate(genes, scenario)
    archive = ParetoArchive(capacity)
    archive.add(genes, fv)
    pop = genes[None, :].copy()
    fit = fv[None, :].copy()
    metrics = [MetricsRow(0, fv.copy(), 1, fv.copy())]
    return RunResult(
        population=pop,
        fitness=fit,
        archive=archive,
        metrics=metrics,
        initial_population=pop.copy(),
        initial_fitness=fit.copy(),
    )


def _execute_run(args) -> tuple[str, int, RunResult, float]:
    scenario, algorithm, seed, budget, cicm = args
    started = time.perf_counter()
    if algorithm == "moead":
        result = run_moead(scenario, budget, seed)
    elif algorithm == "moead-cicm":
        result = run_moead_cicm(scenario, budget, seed, cicm)
    elif algorithm == "random":
        result = _single_solution_result(random_deployment(scenario, seed), scenario, budget.archive_capacity)
    elif algorithm == "uniform":
        result = _single_solution_result(uniform_deployment(scenario), scenario, budget.archive_capacity)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return algorithm, seed, result, time.perf_counter() - started


def run_experiment(
    scenario: Scenario,
    algorithms,
    seeds,
    budget: OptimizerParams | None = None,
    cicm: CicmParams | None = None,
    jobs: int = 1,
) -> ExperimentResult:
    """Run every (algorithm, seed) pair and reduce to reports and summary.

    All runs share one objective frame computed after the fact: min-max
    normalization bounds over the union of the final archives, a joint
    ideal point (the lower bound), and a hypervolume reference of 1.1x the
    componentwise maximum over all initial-population objective vectors.
    Per run, the knee point minimizes the equal-weight normalized
    Tchebycheff distance to the joint ideal; its power grid yields the
    high-quality area. Independent runs may execute in parallel (jobs > 1);
    the reduction is single-threaded and order-stable.
    """
    algorithms = list(algorithms)
    seeds = [int(s) for s in seeds]
    for name in algorithms:
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {name!r}; expected one of {ALGORITHMS}")
    if budget is None:
        budget = OptimizerParams()
    if jobs < 1:
        raise ValueError("jobs must be at least 1")

    tasks = [(scenario, a, s, budget, cicm) for a in algorithms for s in seeds]
    if not tasks:
        return ExperimentResult()
    if jobs == 1 or len(tasks) == 1:
        outputs = [_execute_run(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_execute_run, tasks))

    initial_max = np.vstack([o[2].initial_fitness for o in outputs]).max(axis=0)
    reference = 1.1 * initial_max
    union = np.vstack([o[2].archive.fitness for o in outputs])
    low = union.min(axis=0)
    high = union.max(axis=0)
    span = np.where(high - low > 0.0, high - low, 1.0)
    reference_n = (reference - low) / span

    records: list[RunRecord] = []
    for algorithm, seed, result, wall in outputs:
        archive_fitness = result.archive.fitness
        normalized = (archive_fitness - low) / span
        knee_index = int(np.argmin((_KNEE_WEIGHTS * np.abs(normalized)).max(axis=1)))
        knee_genes, knee_fitness = result.archive.entries()[knee_index]
        grid = power_grid(knee_genes, scenario)
        area = high_quality_area(grid)
        inside = (normalized <= reference_n).all(axis=1)
        hv = hypervolume(normalized[inside], reference_n) if bool(inside.any()) else 0.0
        records.append(
            RunRecord(
                report=RunReport(
                    algorithm=algorithm,
                    seed=seed,
                    f1=float(knee_fitness[0]),
                    f2=float(knee_fitness[1]),
                    f3=float(knee_fitness[2]),
                    area_m2=float(area),
                    hypervolume=float(hv),
                    wall_time_s=float(wall),
                ),
                archive=result.archive,
                metrics=result.metrics,
                knee_genes=knee_genes,
                knee_fitness=knee_fitness,
                grid=grid,
                initial_population=result.initial_population,
                initial_fitness=result.initial_fitness,
            )
        )

    summary: list[SummaryRow] = []
    for name in algorithms:
        reports = [r.report for r in records if r.report.algorithm == name]
        summary.append(
            SummaryRow(
                algorithm=name,
                f1=float(np.mean([r.f1 for r in reports])),
                f2=float(np.mean([r.f2 for r in reports])),
                f3=float(np.mean([r.f3 for r in reports])),
                area_m2=float(np.mean([r.area_m2 for r in reports])),
                hypervolume=float(np.mean([r.hypervolume for r in reports])),
            )
        )

    return ExperimentResult(
        records=records,
        summary=summary,
        reference_point=reference,
        objective_low=low,
        objective_high=high,
    )
