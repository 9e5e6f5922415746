"""Cuckoo search over threshold vectors with Levy-flight proposals.

One generation performs, in this exact RNG draw order (the order is part of
the determinism contract):

1. pick a random nest ``i``: one ``integers(0, n)`` draw;
2. propose a cuckoo by a Levy move of nest ``i`` relative to the best nest
   (one Levy step per coordinate, two normals each) and repair it;
3. pick a random victim ``j != i``: one ``integers(0, n-1)`` draw, shifted
   past ``i``; the cuckoo replaces nest ``j`` only if strictly fitter;
4. abandon the ``ceil(pa * (n - 1))`` worst nests among the non-best nests
   (the single best nest always survives) and rebuild them with fresh uniform
   random threshold sets, drawn and evaluated worst-first.

The best-so-far fitness is recorded once per generation; elitism makes the
trace non-decreasing.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParams
from .image import Histogram
from .levy import LevyParams, levy_step
from .rng import RngState, make_rng
from .thresholding import (
    SegmentationResult,
    ThresholdSet,
    class_representatives,
    fitness_from_histogram,
    random_threshold_set,
    repair,
)

_U64 = 2**64


@dataclass(frozen=True)
class SearchParams:
    """Population size, budget, abandonment rate, Levy parameters and seed."""

    levels: int
    nests: int = 20
    generations: int = 50
    pa: float = 0.25
    levy: LevyParams = field(default_factory=LevyParams)
    seed: int = 0

    def __post_init__(self):
        if self.levels < 1 or self.levels > 255:
            raise InvalidParams(f"levels must lie in [1, 255], got {self.levels}")
        if self.nests < 2:
            raise InvalidParams(f"need at least 2 nests for pairwise comparison, got {self.nests}")
        if self.generations < 1:
            raise InvalidParams(f"generations must be >= 1, got {self.generations}")
        if not 0.0 <= self.pa <= 1.0:
            raise InvalidParams(f"pa must lie in [0, 1], got {self.pa}")
        if not 0 <= self.seed < _U64:
            raise InvalidParams(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class SearchReport:
    """Best solution, per-generation best-so-far trace, parameters, eval count."""

    best: SegmentationResult
    trace: tuple
    params: SearchParams
    evaluations: int


def propose_cuckoo(
    rng: RngState, current: ThresholdSet, best: ThresholdSet, levy: LevyParams
) -> ThresholdSet:
    """Levy move of ``current`` scaled by its distance from ``best``, repaired.

    Per coordinate k: ``raw_k = current_k + alpha * step_k * (current_k -
    best_k)`` with independent Levy steps.  When the moving nest *is* the best
    nest (equal vectors) the difference factor is replaced by one gray level
    so the best nest can still explore.
    """
    if len(current) != len(best):
        raise InvalidParams("current and best threshold sets must have equal length")
    x = len(current)
    steps = np.array([levy_step(rng, levy) for _ in range(x)])
    cur = current.as_array().astype(float)
    if current.thresholds == best.thresholds:
        diff = np.ones(x)
    else:
        diff = cur - best.as_array().astype(float)
    # diff == 0 coordinates stay put; skip the product so an infinite step
    # cannot turn 0 into NaN
    move = np.where(diff == 0.0, 0.0, levy.alpha * steps * diff)
    return repair(cur + move)


def _abandon_count(pa: float, n: int) -> int:
    # fraction of the n-1 non-best nests, rounded to kill float fuzz in pa*(n-1)
    return min(n - 1, math.ceil(round(pa * (n - 1), 9)))


def abandon_worst(rng: RngState, nests: list, fitnesses: np.ndarray, pa: float, evaluate):
    """Replace the worst ``ceil(pa * (n-1))`` non-best nests with fresh random ones.

    The single best nest (ties broken by lower index) is never replaced.
    Returns the updated population, fitnesses, and the replacement count.
    Replacements are drawn and evaluated in worst-first order.
    """
    n = len(nests)
    if n < 2:
        raise InvalidParams("population size must be at least 2")
    nests = list(nests)
    fitnesses = np.array(fitnesses, dtype=float)
    k = _abandon_count(pa, n)
    if k == 0:
        return nests, fitnesses, 0
    best_idx = int(np.argmax(fitnesses))
    order = [i for i in np.argsort(fitnesses, kind="stable") if i != best_idx]
    x = len(nests[0])
    for idx in order[:k]:
        fresh = random_threshold_set(rng, x)
        nests[idx] = fresh
        fitnesses[idx] = evaluate(fresh)
    return nests, fitnesses, k


def search(hist: Histogram, params: SearchParams) -> SearchReport:
    """Run the full search and return the best segmentation plus its trace."""
    rng = make_rng(params.seed)
    n = params.nests

    def evaluate(ts: ThresholdSet) -> float:
        return fitness_from_histogram(hist, ts)

    nests = [random_threshold_set(rng, params.levels) for _ in range(n)]
    fits = np.array([evaluate(ts) for ts in nests])
    evaluations = n

    trace = []
    for _ in range(params.generations):
        i = int(rng.generator.integers(0, n))
        best_idx = int(np.argmax(fits))
        cuckoo = propose_cuckoo(rng, nests[i], nests[best_idx], params.levy)
        cuckoo_fit = evaluate(cuckoo)
        evaluations += 1
        j = int(rng.generator.integers(0, n - 1))
        if j >= i:
            j += 1
        if cuckoo_fit > fits[j]:
            nests[j] = cuckoo
            fits[j] = cuckoo_fit
        nests, fits, replaced = abandon_worst(rng, nests, fits, params.pa, evaluate)
        evaluations += replaced
        trace.append(float(fits.max()))

    best_idx = int(np.argmax(fits))
    best_ts = nests[best_idx]
    best = SegmentationResult(
        thresholds=best_ts,
        class_map=class_representatives(hist, best_ts),
        fitness=float(fits[best_idx]),
    )
    return SearchReport(best=best, trace=tuple(trace), params=params, evaluations=evaluations)
