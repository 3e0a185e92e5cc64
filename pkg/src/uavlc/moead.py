"""Decomposition-based multi-objective evolutionary optimizer.

The problem is decomposed into Q scalar subproblems, one per weight vector
of a simplex lattice, each scored by the weighted Tchebycheff distance to
the running ideal point. Every generation produces one offspring per
subproblem from its mating neighborhood and lets it replace incumbents
throughout its replacement neighborhood whenever its Tchebycheff score is
no worse. Nondominated candidates accumulate in a bounded external
archive.

All stochastic draws (initial population, parent picks, crossover cuts)
come from a single numpy default_rng(seed) stream in a fixed documented
order, which makes runs bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from uavlc.problem import Scenario, evaluate, repair


@dataclass(frozen=True)
class OptimizerParams:
    """Budget and neighborhood sizing shared by both optimizer variants.

    population_target is rounded up to the nearest simplex-lattice size
    (see generate_weights). mating_size / replacement_size default to 10%
    of the population, at least 2.
    """

    population_target: int = 50
    iterations: int = 200
    mating_size: int | None = None
    replacement_size: int | None = None
    archive_capacity: int = 500

    def __post_init__(self):
        if self.population_target < 3:
            raise ValueError("population_target must be at least 3")
        if self.iterations < 0:
            raise ValueError("iterations must be nonnegative")
        for name in ("mating_size", "replacement_size"):
            value = getattr(self, name)
            if value is not None and value < 2:
                raise ValueError(f"{name} must be at least 2")
        if self.archive_capacity < 1:
            raise ValueError("archive_capacity must be at least 1")


def generate_weights(subproblem_count_target: int, objectives: int = 3) -> np.ndarray:
    """Simplex-lattice weight vectors {(i/H, j/H, k/H) : i + j + k = H}.

    Uses the smallest lattice parameter H whose vector count
    C(H + objectives - 1, objectives - 1) reaches the target; the actual
    count (the returned row count) becomes the population size.
    """
    if objectives < 2:
        raise ValueError("objectives must be at least 2")
    if subproblem_count_target < objectives:
        raise ValueError("subproblem_count_target must be at least the objective count")
    h = 1
    while math.comb(h + objectives - 1, objectives - 1) < subproblem_count_target:
        h += 1

    rows: list[list[int]] = []

    def compositions(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            rows.append(prefix + [remaining])
            return
        for i in range(remaining + 1):
            compositions(prefix + [i], remaining - i, slots - 1)

    compositions([], h, objectives)
    return np.array(rows, dtype=float) / h


def build_neighborhoods(weights, size: int) -> np.ndarray:
    """Indices of the `size` nearest weight vectors per subproblem.

    Euclidean distance, self always included (distance zero), ties broken
    toward the lower index via a stable sort.
    """
    w = np.asarray(weights, dtype=float)
    if not 1 <= size <= w.shape[0]:
        raise ValueError("size must lie in [1, population size]")
    d2 = ((w[:, None, :] - w[None, :, :]) ** 2).sum(axis=-1)
    order = np.argsort(d2, axis=1, kind="stable")
    return np.ascontiguousarray(order[:, :size])


def tchebycheff(fitness, weight, ideal) -> float:
    """Weighted Tchebycheff scalarization max_i w_i * |f_i - z_i|."""
    f = np.asarray(fitness, dtype=float)
    w = np.asarray(weight, dtype=float)
    z = np.asarray(ideal, dtype=float)
    return float(np.max(w * np.abs(f - z)))


def update_ideal(ideal, fitness) -> np.ndarray:
    """Componentwise minimum of the ideal point and a new objective vector."""
    return np.minimum(np.asarray(ideal, dtype=float), np.asarray(fitness, dtype=float))


def genetic_crossover(parent_a, parent_b, scenario: Scenario, rng) -> np.ndarray:
    """Single-point crossover at a uniform random cut, then repair.

    The cut position is drawn from {0, ..., len}; boundary cuts copy one
    parent. Before repair every offspring gene equals the corresponding
    gene of one of the parents.
    """
    a = np.asarray(parent_a, dtype=float)
    b = np.asarray(parent_b, dtype=float)
    if a.shape != b.shape:
        raise ValueError("parents must have identical gene length")
    cut = int(rng.integers(0, a.size + 1))
    child = np.concatenate([a[:cut], b[cut:]])
    return repair(child, scenario)


@dataclass
class DecompositionState:
    """Mutable optimizer state: one row per subproblem."""

    weights: np.ndarray
    mating_neighborhoods: np.ndarray
    replacement_neighborhoods: np.ndarray
    population: np.ndarray
    fitness: np.ndarray
    ideal_point: np.ndarray


def neighborhood_replace(state: DecompositionState, subproblem_index: int, candidate, candidate_fitness) -> int:
    """Let a candidate replace incumbents across a replacement neighborhood.

    Every neighbor whose own Tchebycheff score (under the current ideal
    point) is not better than the candidate's adopts the candidate. Mutates
    state in place and returns the replacement count.
    """
    fv = np.asarray(candidate_fitness, dtype=float)
    neighbors = state.replacement_neighborhoods[subproblem_index]
    w = state.weights[neighbors]
    g_new = (w * np.abs(fv - state.ideal_point)).max(axis=1)
    g_old = (w * np.abs(state.fitness[neighbors] - state.ideal_point)).max(axis=1)
    mask = g_new <= g_old
    rows = neighbors[mask]
    state.population[rows] = np.asarray(candidate, dtype=float)
    state.fitness[rows] = fv
    return int(mask.sum())


class ParetoArchive:
    """Bounded store of mutually nondominated (genes, fitness) entries.

    Candidates dominated by (or duplicating) a stored objective vector are
    rejected; accepted candidates evict every entry they dominate. When the
    capacity is exceeded, the entry with the smallest nearest-neighbor
    distance in min-max normalized objective space is discarded (ties go
    to the lowest index), which keeps the spread.
    """

    def __init__(self, capacity: int = 500):
        if capacity < 1:
            raise ValueError("capacity must be at least 1")
        self.capacity = int(capacity)
        self._genes: list[np.ndarray] = []
        self._fitness: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self._genes)

    @property
    def fitness(self) -> np.ndarray:
        """(n, objectives) objective vectors, in insertion order."""
        if self._fitness is None:
            return np.empty((0, 0))
        return self._fitness.copy()

    @property
    def genes(self) -> np.ndarray:
        """(n, gene_count) gene vectors, in insertion order."""
        if not self._genes:
            return np.empty((0, 0))
        return np.vstack(self._genes)

    def entries(self) -> list[tuple[np.ndarray, np.ndarray]]:
        assert self._fitness is not None or not self._genes
        return [(g.copy(), self._fitness[i].copy()) for i, g in enumerate(self._genes)]

    def add(self, genes, fitness) -> bool:
        """Insert a candidate; returns True when it was kept."""
        fv = np.asarray(fitness, dtype=float).reshape(-1)
        if self._fitness is None:
            self._fitness = fv[None, :].copy()
            self._genes = [np.array(genes, dtype=float)]
            return True
        f = self._fitness
        # reject when some entry is componentwise <= (dominates or equals)
        if bool(np.any((f <= fv).all(axis=1))):
            return False
        dominated = (fv <= f).all(axis=1) & (fv < f).any(axis=1)
        if dominated.any():
            keep = ~dominated
            self._fitness = f[keep]
            self._genes = [g for g, k in zip(self._genes, keep) if k]
        self._genes.append(np.array(genes, dtype=float))
        self._fitness = np.vstack([self._fitness, fv[None, :]])
        while len(self._genes) > self.capacity:
            self._drop_most_crowded()
        return True

    def _drop_most_crowded(self) -> None:
        f = self._fitness
        low = f.min(axis=0)
        span = f.max(axis=0) - low
        span = np.where(span > 0.0, span, 1.0)
        normalized = (f - low) / span
        d2 = ((normalized[:, None, :] - normalized[None, :, :]) ** 2).sum(axis=-1)
        np.fill_diagonal(d2, np.inf)
        drop = int(np.argmin(d2.min(axis=1)))
        self._fitness = np.delete(f, drop, axis=0)
        del self._genes[drop]


@dataclass
class MetricsRow:
    """Per-iteration progress snapshot."""

    iteration: int
    ideal_point: np.ndarray
    archive_size: int
    mean_fitness: np.ndarray


@dataclass
class RunResult:
    """Everything a finished optimizer run hands back."""

    population: np.ndarray
    fitness: np.ndarray
    archive: ParetoArchive
    metrics: list[MetricsRow] = field(default_factory=list)
    initial_population: np.ndarray | None = None
    initial_fitness: np.ndarray | None = None


def _resolve_size(requested: int | None, population: int) -> int:
    size = max(2, population // 10) if requested is None else requested
    return min(size, population)


def run_decomposition(scenario: Scenario, params: OptimizerParams, seed: int, reproduce, power_init=None) -> RunResult:
    """Shared optimizer engine; the variants differ only in the plugged-in
    reproduction operator and optional power-gene initializer.

    reproduce(state, subproblem_index, iteration, rng) must return a
    feasible gene vector. power_init(rng), when given, supplies the power
    block of each initial individual (positions stay uniform random).
    """
    rng = np.random.default_rng(seed)
    weights = generate_weights(params.population_target)
    q = weights.shape[0]
    mating = build_neighborhoods(weights, _resolve_size(params.mating_size, q))
    replacement = build_neighborhoods(weights, _resolve_size(params.replacement_size, q))

    u = scenario.uav_count
    x_min, x_max, y_min, y_max = scenario.region
    p_min, p_max = scenario.power_bounds
    population = np.empty((q, scenario.gene_count))
    for i in range(q):
        x = rng.uniform(x_min, x_max, u)
        y = rng.uniform(y_min, y_max, u)
        p = rng.uniform(p_min, p_max, u) if power_init is None else power_init(rng)
        population[i] = np.concatenate([x, y, np.full(u, float(scenario.altitude)), p])
    fitness = np.array([evaluate(ind, scenario) for ind in population])

    state = DecompositionState(
        weights=weights,
        mating_neighborhoods=mating,
        replacement_neighborhoods=replacement,
        population=population,
        fitness=fitness,
        ideal_point=fitness.min(axis=0),
    )
    archive = ParetoArchive(params.archive_capacity)
    for ind, fv in zip(population, fitness):
        archive.add(ind, fv)

    initial_population = population.copy()
    initial_fitness = fitness.copy()
    metrics = [MetricsRow(0, state.ideal_point.copy(), len(archive), fitness.mean(axis=0))]

    for iteration in range(1, params.iterations + 1):
        for i in range(q):
            child = reproduce(state, i, iteration, rng)
            child_fitness = evaluate(child, scenario)
            state.ideal_point = update_ideal(state.ideal_point, child_fitness)
            neighborhood_replace(state, i, child, child_fitness)
            archive.add(child, child_fitness)
        metrics.append(
            MetricsRow(iteration, state.ideal_point.copy(), len(archive), state.fitness.mean(axis=0))
        )

    return RunResult(
        population=state.population,
        fitness=state.fitness,
        archive=archive,
        metrics=metrics,
        initial_population=initial_population,
        initial_fitness=initial_fitness,
    )


def run_moead(scenario: Scenario, params: OptimizerParams, seed: int) -> RunResult:
    """Conventional variant: two distinct mating-neighborhood parents,
    single-point crossover, repair. No mutation operator."""

    def reproduce(state: DecompositionState, i: int, iteration: int, rng) -> np.ndarray:
        neighbors = state.mating_neighborhoods[i]
        pick = rng.choice(neighbors, size=2, replace=False)
        return genetic_crossover(state.population[pick[0]], state.population[pick[1]], scenario, rng)

    return run_decomposition(scenario, params, seed, reproduce)
