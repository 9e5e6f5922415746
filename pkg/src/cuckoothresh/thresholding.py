"""Threshold vectors, gray-level partitions, and the correlation fitness.

A candidate solution is a strictly increasing vector of ``x`` integer
thresholds in [1, 255].  The thresholds split [0, 255] into ``x + 1``
half-open classes ``[t_j, t_{j+1})`` (sentinels 0 and 256); each class is
replaced by its histogram-weighted mean gray value in the segmented image.
The fitness of a candidate is the Pearson correlation between the original
and segmented images, computed entirely in the 256-bin histogram domain so
its cost is independent of pixel count.
"""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DegenerateImage, InvalidParams, TooManyLevels, Unrepairable
from .image import GRAY_LEVELS, GrayImage, Histogram
from .rng import RngState

_GRAYS = np.arange(GRAY_LEVELS, dtype=np.int64)


@dataclass(frozen=True)
class ThresholdSet:
    """Strictly increasing integer thresholds, each in [1, 255]."""

    thresholds: tuple

    def __post_init__(self):
        ts = tuple(int(t) for t in self.thresholds)
        if len(ts) < 1:
            raise InvalidParams("a threshold set needs at least one threshold")
        if any(t < 1 or t > 255 for t in ts):
            raise InvalidParams(f"thresholds must lie in [1, 255], got {ts}")
        if any(a >= b for a, b in zip(ts, ts[1:])):
            raise InvalidParams(f"thresholds must be strictly increasing, got {ts}")
        object.__setattr__(self, "thresholds", ts)

    def __len__(self):
        return len(self.thresholds)

    def __iter__(self):
        return iter(self.thresholds)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.thresholds, dtype=np.int64)


@dataclass(frozen=True)
class ClassMap:
    """Sentinel-extended class boundaries plus one representative per class.

    ``boundaries`` is ``(0, t_1, ..., t_x, 256)``; class ``j`` covers gray
    values ``boundaries[j] <= g < boundaries[j+1]``, so the classes are
    disjoint and cover [0, 255] exactly.
    """

    boundaries: tuple
    representatives: tuple

    def __post_init__(self):
        bounds = tuple(int(b) for b in self.boundaries)
        reps = tuple(int(r) for r in self.representatives)
        if len(bounds) < 3 or bounds[0] != 0 or bounds[-1] != GRAY_LEVELS:
            raise InvalidParams(f"boundaries must run from 0 to 256, got {bounds}")
        if any(a >= b for a, b in zip(bounds, bounds[1:])):
            raise InvalidParams("boundaries must be strictly increasing")
        if len(reps) != len(bounds) - 1:
            raise InvalidParams("need exactly one representative per class")
        if any(r < 0 or r > 255 for r in reps):
            raise InvalidParams("representatives must lie in [0, 255]")
        object.__setattr__(self, "boundaries", bounds)
        object.__setattr__(self, "representatives", reps)

    @property
    def num_classes(self) -> int:
        return len(self.representatives)

    @cached_property
    def lookup(self) -> np.ndarray:
        """256-entry table mapping each gray value to its representative."""
        reps = np.asarray(self.representatives, dtype=np.uint8)
        cls = np.searchsorted(self.boundaries[1:-1], _GRAYS, side="right")
        table = reps[cls]
        table.flags.writeable = False
        return table


@dataclass(frozen=True)
class SegmentationResult:
    """A threshold vector, its class map, and its correlation fitness."""

    thresholds: ThresholdSet
    class_map: ClassMap
    fitness: float


def random_threshold_set(rng: RngState, x: int) -> ThresholdSet:
    """Draw ``x`` distinct thresholds uniformly without replacement from [1, 255].

    Uses rejection: repeated ``integers(1, 256)`` draws, skipping values
    already chosen, until ``x`` are collected (uniform over x-subsets).
    """
    if x < 1:
        raise InvalidParams(f"need at least one threshold, got x={x}")
    if x > 255:
        raise TooManyLevels(f"cannot draw {x} distinct thresholds from [1, 255]")
    gen = rng.generator
    chosen = set()
    while len(chosen) < x:
        chosen.add(int(gen.integers(1, GRAY_LEVELS)))
    return ThresholdSet(tuple(sorted(chosen)))


def repair(raw) -> ThresholdSet:
    """Coerce raw (possibly fractional, unordered, colliding) values into a
    valid threshold set.

    Rounds half-up, clamps to [1, 255], sorts, then resolves duplicates by
    moving each collided value to the nearest free integer upward, wrapping
    to the lowest free integer overall once 255 is exhausted.
    """
    arr = np.asarray(raw, dtype=float)
    if arr.ndim != 1 or arr.size < 1:
        raise InvalidParams("repair expects a non-empty flat sequence")
    if arr.size > 255:
        raise Unrepairable(f"{arr.size} thresholds cannot all be distinct in [1, 255]")
    if np.isnan(arr).any():
        raise InvalidParams("raw threshold values must not be NaN")
    vals = np.clip(np.floor(arr + 0.5), 1, 255).astype(np.int64)
    vals.sort()
    used = set()
    out = []
    for v in vals:
        v = int(v)
        if v in used:
            while v <= 255 and v in used:
                v += 1
            if v > 255:
                v = 1
                while v in used:
                    v += 1
        used.add(v)
        out.append(v)
    return ThresholdSet(tuple(sorted(out)))


def _partition(counts: np.ndarray, thresholds: ThresholdSet):
    """Class index per gray value and representative per class.

    Non-empty classes take the rounded (half-up) histogram-weighted mean of
    their gray values; empty classes take the integer midpoint of their
    interval, ``(lo + hi - 1) // 2`` with ``hi`` exclusive.
    """
    ts = thresholds.as_array()
    cls = np.searchsorted(ts, _GRAYS, side="right")
    k = len(ts) + 1
    occupancy = np.bincount(cls, weights=counts, minlength=k)
    mass = np.bincount(cls, weights=_GRAYS * counts, minlength=k)
    bounds = np.concatenate(([0], ts, [GRAY_LEVELS]))
    midpoints = (bounds[:-1] + bounds[1:] - 1) // 2
    with np.errstate(invalid="ignore", divide="ignore"):
        means = np.floor(mass / occupancy + 0.5)
    reps = np.where(occupancy > 0, means, midpoints).astype(np.int64)
    return cls, reps


def class_representatives(hist: Histogram, thresholds: ThresholdSet) -> ClassMap:
    """Build the class map (boundaries + representatives) for a threshold set."""
    _, reps = _partition(hist.counts, thresholds)
    boundaries = (0,) + thresholds.thresholds + (GRAY_LEVELS,)
    return ClassMap(boundaries=boundaries, representatives=tuple(int(r) for r in reps))


def apply_class_map(image: GrayImage, class_map: ClassMap) -> GrayImage:
    """Relabel every pixel with its class representative (the segmented image)."""
    return GrayImage(class_map.lookup[image.pixels])


def fitness_from_histogram(hist: Histogram, thresholds: ThresholdSet) -> float:
    """Correlation between an image and its segmentation, from the histogram alone.

    With ``f(g)`` the representative of g's class, this is the Pearson
    correlation of the pixel populations (g, f(g)) weighted by the histogram
    counts.  Returns 0.0 for a degenerate (single effective class) candidate;
    raises DegenerateImage when the original image is constant.

    The result is clamped to [-1, 1] to absorb last-ulp rounding.
    """
    counts = hist.counts
    if hist.total < 2 or int(np.count_nonzero(counts)) < 2:
        raise DegenerateImage("correlation is undefined for a constant image")
    cls, reps = _partition(counts, thresholds)
    f = reps[cls]
    h = counts.astype(float)
    total = float(hist.total)
    mean_i = float(int(np.dot(_GRAYS, counts))) / total
    mean_s = float(int(np.dot(f, counts))) / total
    di = _GRAYS.astype(float) - mean_i
    ds = f.astype(float) - mean_s
    var_i = float(np.dot(di * di, h))
    var_s = float(np.dot(ds * ds, h))
    if var_s == 0.0:
        return 0.0
    rho = float(np.dot(di * ds, h)) / math.sqrt(var_i * var_s)
    return min(1.0, max(-1.0, rho))
