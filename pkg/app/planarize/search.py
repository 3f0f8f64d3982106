"""
Randomised drivers around the descent engines: random restarts, the
order-merging crossover and a small elitist evolutionary loop.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from app.config import config
from app.cycles.space import CycleSystem
from app.errors import PlanarError
from app.gf2.gauss import modified_gauss, random_basis_candidate
from app.graph.core import Graph, SpanningTreeSplit, spanning_split
from app.planar_logging import get_logger
from app.planarize.descent import PlanarResult, cubic_descent

logger = get_logger(__name__)


def planarize_permutation(
    g: Graph,
    sys: CycleSystem,
    permutation: Sequence[int],
    split: SpanningTreeSplit | None = None,
) -> PlanarResult:
    """Gauss basis in the given row order, then cubic descent."""
    split = split or spanning_split(g)
    trace = modified_gauss(g, split, sys, order=permutation)
    result = cubic_descent(sys, trace.basis_mask)
    result.permutation = list(permutation)
    return result


def random_restart_pipeline(
    g: Graph,
    sys: CycleSystem,
    restarts: int | None = None,
    seed: int | None = None,
    *,
    split: SpanningTreeSplit | None = None,
) -> PlanarResult:
    restarts = config.planarize.restarts if restarts is None else restarts
    seed = config.planarize.seed if seed is None else seed
    if restarts < 1:
        raise PlanarError("restarts must be at least 1")
    split = split or spanning_split(g)
    rng = random.Random(seed)
    best: PlanarResult | None = None
    last: PlanarResult | None = None
    for r in range(restarts):
        permutation = list(range(len(sys)))
        rng.shuffle(permutation)
        result = planarize_permutation(g, sys, permutation, split)
        result.seed = seed
        result.restart = r
        last = result
        if not result.ok:
            continue
        if best is None or result.sort_key < best.sort_key:
            if best is not None:
                logger.info("restart %d: %d deleted edges (was %d)", r, len(result.deleted_edges), len(best.deleted_edges))
            best = result
    if best is None:
        logger.warning("random_restart_pipeline: all %d restarts failed", restarts)
        assert last is not None
        return last
    logger.info(
        "random_restart_pipeline: best restart %d deletes %s",
        best.restart, sorted(best.deleted_edges),
    )
    return best


def crossover_merge(p1: Sequence[int], p2: Sequence[int]) -> list[int]:
    """Take the smaller of the two heads, then strike that value from both parents."""
    if sorted(p1) != sorted(p2) or len(set(p1)) != len(p1):
        raise PlanarError("crossover parents must permute the same index set")
    a, b = list(p1), list(p2)
    child: list[int] = []
    while a:
        pick = min(a[0], b[0])
        child.append(pick)
        a.remove(pick)
        b.remove(pick)
    return child


def mutate(permutation: list[int], rng: random.Random) -> list[int]:
    """Single transposition."""
    out = list(permutation)
    if len(out) >= 2:
        i, j = rng.sample(range(len(out)), 2)
        out[i], out[j] = out[j], out[i]
    return out


@dataclass(slots=True)
class _Individual:
    fitness: int
    born: int
    permutation: list[int]
    result: PlanarResult


@dataclass(slots=True)
class EvolutionResult:
    best: PlanarResult
    history: list[int] = field(default_factory=list)
    evaluations: int = 0


def _fitness(result: PlanarResult) -> int:
    return result.edges_kept if result.ok else -1


def evolutionary_search(
    g: Graph,
    sys: CycleSystem,
    population: int | None = None,
    generations: int | None = None,
    seed: int | None = None,
    *,
    mutation_rate: float | None = None,
    split: SpanningTreeSplit | None = None,
) -> EvolutionResult:
    """Elitist loop: fitness is the number of edges kept by Gauss basis + cubic descent.

    The initial population draws the same permutations as random restarts with
    the same seed, so generation 0 is never worse than those restarts.
    """
    population = config.planarize.population if population is None else population
    generations = config.planarize.generations if generations is None else generations
    seed = config.planarize.seed if seed is None else seed
    mutation_rate = config.planarize.mutation_rate if mutation_rate is None else mutation_rate
    if population < 2:
        raise PlanarError("population must be at least 2")
    split = split or spanning_split(g)
    rng = random.Random(seed)
    born = 0

    def evaluate(permutation: list[int]) -> _Individual:
        nonlocal born
        result = planarize_permutation(g, sys, permutation, split)
        result.seed = seed
        result.restart = born
        individual = _Individual(_fitness(result), born, permutation, result)
        born += 1
        return individual

    pool: list[_Individual] = []
    for _ in range(population):
        permutation = list(range(len(sys)))
        rng.shuffle(permutation)
        pool.append(evaluate(permutation))
    pool.sort(key=lambda ind: (-ind.fitness, ind.born))
    history = [pool[0].fitness]

    for generation in range(generations):
        children: list[_Individual] = []
        for _ in range(population):
            i, j = rng.sample(range(len(pool)), 2)
            child = crossover_merge(pool[i].permutation, pool[j].permutation)
            if rng.random() < mutation_rate:
                child = mutate(child, rng)
            children.append(evaluate(child))
        pool = sorted(pool + children, key=lambda ind: (-ind.fitness, ind.born))[:population]
        if pool[0].fitness > history[-1]:
            logger.info("generation %d: best fitness %d", generation + 1, pool[0].fitness)
        history.append(pool[0].fitness)

    return EvolutionResult(best=pool[0].result, history=history, evaluations=born)


def planarize_from_random_basis(
    g: Graph,
    sys: CycleSystem,
    seed: int | None = None,
    *,
    attempts: int = 100,
    split: SpanningTreeSplit | None = None,
) -> PlanarResult:
    """Random ν-subset until one is a basis (parity check), then cubic descent."""
    seed = config.planarize.seed if seed is None else seed
    split = split or spanning_split(g)
    rng = random.Random(seed)
    for attempt in range(attempts):
        candidate, independent = random_basis_candidate(g, split, sys, rng)
        if not independent:
            continue
        result = cubic_descent(sys, candidate)
        result.seed = seed
        result.restart = attempt
        result.permutation = candidate
        logger.debug("random basis %s accepted after %d draws", candidate, attempt + 1)
        return result
    raise PlanarError(f"no independent random basis in {attempts} draws")
