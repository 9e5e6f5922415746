"""Brute-force global optimum over threshold combinations.

Serves as ground truth for validating the stochastic search on small
instances.  The default *restricted* mode only tries thresholds at boundaries
between consecutive gray values actually present in the histogram: moving a
threshold across empty bins cannot change how the present values are
partitioned, so no optimum is lost, and picking the smallest member of each
equivalence interval preserves the lexicographic tie-break of a full scan.
Unrestricted mode enumerates every strictly increasing tuple over [1, 255]
and exists mainly to check the enumeration count.
"""

import itertools
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import DegenerateImage, InvalidArgs, TooLarge
from .image import Histogram
from .thresholding import (
    SegmentationResult,
    ThresholdSet,
    class_representatives,
    fitness_from_histogram,
)

DEFAULT_MAX_COMBINATIONS = 10_000_000


def combination_count(values: int, x: int) -> int:
    """Binomial coefficient C(values, x) in exact integer arithmetic."""
    if values < 1 or x < 1 or x > values:
        raise InvalidArgs(f"need 1 <= x <= values, got values={values}, x={x}")
    return math.comb(values, x)


def interior_candidates(hist: Histogram) -> list:
    """Canonical candidate thresholds: one per boundary between consecutive
    present gray values (the smallest threshold realizing that split)."""
    present = hist.distinct_values()
    return [int(p) + 1 for p in present[:-1]]


def enumerate_candidates(hist: Histogram, x: int, restricted: bool = True):
    """Iterator over the threshold tuples the exhaustive search evaluates,
    in lexicographic order."""
    if restricted:
        return itertools.combinations(interior_candidates(hist), x)
    return itertools.combinations(range(1, 256), x)


def _smallest_covering_tuple(present: np.ndarray, x: int) -> tuple:
    """Lexicographically smallest x-tuple with one threshold in every
    interval separating consecutive present values (used when x exceeds the
    number of such intervals; the spare thresholds only create empty classes)."""
    intervals = [(int(present[k]) + 1, int(present[k + 1])) for k in range(len(present) - 1)]
    chosen = []
    idx = 0
    t = 1
    while len(chosen) < x:
        if idx < len(intervals) and intervals[idx][0] <= t:
            chosen.append(t)
            idx += 1
            t += 1
        elif x - len(chosen) > len(intervals) - idx:
            chosen.append(t)
            t += 1
        else:
            t = intervals[idx][0]
    return tuple(chosen)


def _best_of(hist: Histogram, tuples) -> tuple:
    """(fitness, tuple) argmax over an iterable of tuples; the first maximum
    wins, so lexicographic input order yields the lexicographic tie-break."""
    best_fit = -math.inf
    best_ts = None
    for cand in tuples:
        fit = fitness_from_histogram(hist, ThresholdSet(cand))
        if fit > best_fit:
            best_fit = fit
            best_ts = cand
    return best_fit, best_ts


def exhaustive_best(
    hist: Histogram,
    x: int,
    max_combinations: int = DEFAULT_MAX_COMBINATIONS,
    restricted: bool = True,
    workers: int = 1,
) -> SegmentationResult:
    """Globally optimal segmentation at ``x`` thresholds by enumeration.

    Ties are broken by the lexicographically smallest threshold tuple.  The
    guard compares the unrestricted tuple count C(255, x) against
    ``max_combinations`` and raises TooLarge when exceeded (the exception
    carries the offending count as ``.count``).  With ``workers > 1`` the
    first threshold coordinate is partitioned across a thread pool; results
    are merged in deterministic order, so the outcome is schedule-independent.
    """
    if x < 1 or x > 255:
        raise InvalidArgs(f"threshold count must lie in [1, 255], got {x}")
    count = combination_count(255, x)
    if count > max_combinations:
        exc = TooLarge(
            f"C(255, {x}) = {count} threshold tuples exceeds the budget of {max_combinations}"
        )
        exc.count = count
        raise exc
    present = hist.distinct_values()
    if hist.total < 2 or len(present) < 2:
        raise DegenerateImage("exhaustive search needs a non-constant image")

    if restricted:
        candidates = interior_candidates(hist)
        if x > len(candidates):
            best_ts = _smallest_covering_tuple(present, x)
            ts = ThresholdSet(best_ts)
            return SegmentationResult(
                thresholds=ts,
                class_map=class_representatives(hist, ts),
                fitness=fitness_from_histogram(hist, ts),
            )
        pool = candidates
    else:
        pool = list(range(1, 256))

    if workers <= 1 or len(pool) < 2:
        best_fit, best_ts = _best_of(hist, itertools.combinations(pool, x))
    else:
        def chunk(first_idx: int):
            first = pool[first_idx]
            rest = pool[first_idx + 1 :]
            if x == 1:
                return _best_of(hist, [(first,)])
            return _best_of(
                hist, ((first,) + tail for tail in itertools.combinations(rest, x - 1))
            )

        firsts = range(len(pool) - x + 1)
        with ThreadPoolExecutor(max_workers=workers) as pool_exec:
            results = list(pool_exec.map(chunk, firsts))
        best_fit = -math.inf
        best_ts = None
        for fit, ts in results:  # chunk order is fixed, merge is deterministic
            if ts is not None and fit > best_fit:
                best_fit = fit
                best_ts = ts

    ts = ThresholdSet(best_ts)
    return SegmentationResult(
        thresholds=ts,
        class_map=class_representatives(hist, ts),
        fitness=best_fit,
    )
