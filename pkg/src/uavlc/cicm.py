"""Chaos-initialized decomposition optimizer with scheduled blend mutation.

Variant of the engine in uavlc.moead that differs in exactly two places:

1. Initialization: power genes come from a circle-map chaotic sequence
       x_next = (x + b - (a / 2 pi) * sin(2 pi x)) mod 1
   affinely mapped onto the power box, one iterate per gene, one shared
   stream across the whole population. Positions stay uniform random.

2. Reproduction: parents are split into coordinate segments (x block,
   y block, power block; altitudes untouched); each segment goes through a
   threshold uniform crossover and an iteration-scheduled blend mutation
   whose step size beta shrinks the exploration early-to-late (first
   branch) or grows the exploitation pull (second branch) depending on a
   fresh uniform draw against mutation_probability.

Only the first child lineage survives; the second crossover output serves
as the blend partner inside the mutation.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from uavlc.moead import DecompositionState, OptimizerParams, RunResult, run_decomposition
from uavlc.problem import Scenario, repair


@dataclass(frozen=True)
class CicmParams:
    """Knobs of the chaos initializer and the scheduled mutation.

    Attributes:
        circle_a: sine coupling strength of the circle map.
        circle_b: constant drift of the circle map.
        mutation_probability: branch threshold for the mutation step size.
        mutation_shape: positive integer shaping both step-size exponents.
        iterations_total: schedule horizon; runners overwrite it with the
            actual iteration budget so the schedule spans the whole run.
    """

    circle_a: float = 0.5
    circle_b: float = 0.2
    mutation_probability: float = 0.5
    mutation_shape: int = 3
    iterations_total: int = 200

    def __post_init__(self):
        if not 0.0 <= self.mutation_probability <= 1.0:
            raise ValueError("mutation_probability must lie in [0, 1]")
        if self.mutation_shape < 1:
            raise ValueError("mutation_shape must be at least 1")
        if self.iterations_total < 1:
            raise ValueError("iterations_total must be at least 1")


def circle_map_step(x: float, params: CicmParams) -> float:
    """One circle-map iterate, always inside [0, 1)."""
    nxt = (x + params.circle_b - params.circle_a / (2.0 * math.pi) * math.sin(2.0 * math.pi * x)) % 1.0
    # `% 1.0` can round up to 1.0 for tiny negative arguments; fold it back
    return 0.0 if nxt >= 1.0 else nxt


def circle_map_iterates(x0: float, count: int, params: CicmParams) -> np.ndarray:
    """`count` successive circle-map iterates starting after x0."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = np.empty(count)
    x = float(x0)
    for k in range(count):
        x = circle_map_step(x, params)
        out[k] = x
    return out


def chaos_init_powers(uav_count: int, power_bounds, seed: int, params: CicmParams) -> np.ndarray:
    """Power gene vector from a freshly seeded chaotic sequence.

    x0 is drawn in (0, 1) from default_rng(seed); each of the uav_count
    iterates is mapped affinely onto [p_min, p_max]. The population
    initializer inside run_moead_cicm chains ONE such sequence across all
    individuals instead of reseeding per individual.
    """
    if uav_count < 1:
        raise ValueError("uav_count must be at least 1")
    p_min, p_max = (float(v) for v in power_bounds)
    if not p_min < p_max:
        raise ValueError("power_bounds must satisfy min < max")
    x0 = np.random.default_rng(seed).uniform(1e-12, 1.0)
    iterates = circle_map_iterates(x0, uav_count, params)
    return p_min + iterates * (p_max - p_min)


def split_individual(genes, uav_count: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Split a flat gene vector into its (x, y, z, power) segment copies."""
    g = np.asarray(genes, dtype=float)
    if g.shape != (4 * uav_count,):
        raise ValueError(f"gene vector must have length {4 * uav_count}")
    seg = g.reshape(4, uav_count)
    return seg[0].copy(), seg[1].copy(), seg[2].copy(), seg[3].copy()


def join_individual(x, y, z, p) -> np.ndarray:
    """Inverse of split_individual."""
    return np.concatenate([np.asarray(s, dtype=float) for s in (x, y, z, p)])


def uniform_crossover(segment_a, segment_b, bounds) -> tuple[np.ndarray, np.ndarray]:
    """Threshold uniform crossover of one coordinate segment.

    The threshold X is the midpoint of the segment's valid range. Child a
    keeps a-genes not exceeding X and takes b-genes elsewhere; child b
    plays the mirrored role. Outputs are clamped to the bounds.
    """
    a = np.asarray(segment_a, dtype=float)
    b = np.asarray(segment_b, dtype=float)
    if a.shape != b.shape:
        raise ValueError("segments must have identical length")
    low, high = (float(v) for v in bounds)
    threshold = 0.5 * (low + high)
    child_a = np.where(a <= threshold, a, b)
    child_b = np.where(b <= threshold, b, a)
    return np.clip(child_a, low, high), np.clip(child_b, low, high)


def mutation_scale(q: float, iteration: int, params: CicmParams) -> float:
    """Iteration-scheduled mutation step size beta.

    For q below mutation_probability the scale starts near (2q)^(1/(n+1))
    and decreases with the iteration; otherwise it starts near
    (1-q)^(1/(n+2))/2 and increases. Always finite; may be negative, the
    mutation clamps its result.
    """
    if not 1 <= iteration <= params.iterations_total:
        raise ValueError("iteration must lie in [1, iterations_total]")
    n = params.mutation_shape
    total = float(params.iterations_total)
    it = float(iteration)
    drift = (it - it / math.sqrt(total)) / math.sqrt(total * n)
    if q < params.mutation_probability:
        return (2.0 * q) ** (1.0 / (n + 1)) - drift
    return 0.5 * (1.0 - q) ** (1.0 / (n + 2)) + drift


def scheduled_mutation(child_a_segment, child_b_segment, bounds, iteration: int, params: CicmParams, rng) -> np.ndarray:
    """Blend the two crossover outputs genewise and clamp to the bounds.

    Computes child_b - (child_b - child_a) * r * beta with one fresh
    uniform q per invocation (selecting the beta branch) and one uniform r
    per gene. A zero blend step returns child_b unchanged.
    """
    a = np.asarray(child_a_segment, dtype=float)
    b = np.asarray(child_b_segment, dtype=float)
    if a.shape != b.shape:
        raise ValueError("segments must have identical length")
    beta = mutation_scale(float(rng.random()), iteration, params)
    step = rng.random(a.shape[0])
    out = b - (b - a) * step * beta
    low, high = (float(v) for v in bounds)
    return np.clip(out, low, high)


def cicm_reproduce(
    state: DecompositionState,
    subproblem_index: int,
    iteration: int,
    scenario: Scenario,
    params: CicmParams,
    rng,
) -> np.ndarray:
    """One offspring: segment-wise crossover plus scheduled mutation.

    Two distinct parents are drawn uniformly from the mating neighborhood.
    The x, y and power segments are crossed and mutated in that fixed
    order; altitude genes pass through untouched. Only the first child
    lineage is returned, repaired.
    """
    neighbors = state.mating_neighborhoods[subproblem_index]
    if neighbors.shape[0] < 2:
        raise ValueError("mating neighborhood must contain at least 2 subproblems")
    pick = rng.choice(neighbors, size=2, replace=False)
    parent_a = state.population[pick[0]]
    parent_b = state.population[pick[1]]

    u = scenario.uav_count
    ax, ay, az, ap = split_individual(parent_a, u)
    bx, by, _, bp = split_individual(parent_b, u)
    x_min, x_max, y_min, y_max = scenario.region

    out_segments = []
    for seg_a, seg_b, bounds in (
        (ax, bx, (x_min, x_max)),
        (ay, by, (y_min, y_max)),
        (ap, bp, scenario.power_bounds),
    ):
        child_a, child_b = uniform_crossover(seg_a, seg_b, bounds)
        out_segments.append(scheduled_mutation(child_a, child_b, bounds, iteration, params, rng))

    child = join_individual(out_segments[0], out_segments[1], az, out_segments[2])
    return repair(child, scenario)


def run_moead_cicm(
    scenario: Scenario,
    params: OptimizerParams,
    seed: int,
    cicm: CicmParams | None = None,
) -> RunResult:
    """Chaos-initialized variant of the decomposition optimizer.

    Shares the engine, metrics stream and archive semantics of run_moead;
    differs in the power-gene initializer and the reproduction operator.
    The schedule horizon iterations_total is synchronized to the actual
    iteration budget.
    """
    effective = dataclasses.replace(
        cicm if cicm is not None else CicmParams(),
        iterations_total=max(params.iterations, 1),
    )

    chaos_state = {"x": None}
    p_min, p_max = scenario.power_bounds

    def power_init(rng) -> np.ndarray:
        if chaos_state["x"] is None:
            chaos_state["x"] = rng.uniform(1e-12, 1.0)  # one seeded draw, then pure chaos
        iterates = circle_map_iterates(chaos_state["x"], scenario.uav_count, effective)
        chaos_state["x"] = float(iterates[-1])
        return p_min + iterates * (p_max - p_min)

    def reproduce(state: DecompositionState, i: int, iteration: int, rng) -> np.ndarray:
        return cicm_reproduce(state, i, iteration, scenario, effective, rng)

    return run_decomposition(scenario, params, seed, reproduce, power_init=power_init)
