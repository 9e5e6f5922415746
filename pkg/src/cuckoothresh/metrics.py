"""Pixel-domain segmentation quality measures: correlation, MSE, PSNR.

These operate on full pixel grids and serve as the independent check on the
histogram-domain fitness path: for any segmentation, ``correlation(original,
segmented)`` must agree with the histogram fitness to within 1e-12.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateImage, DimensionMismatch, InvalidParams
from .image import GrayImage

#: Distinguished PSNR value for a zero-error segmentation.
INFINITE = math.inf


@dataclass(frozen=True)
class QualityReport:
    """Correlation, MSE and PSNR of one original/segmented pair."""

    correlation: float
    mse: float
    psnr: float

    def __post_init__(self):
        if (self.mse == 0.0) != (self.psnr == INFINITE):
            raise InvalidParams("psnr must be INFINITE exactly when mse is zero")


def _pearson(a: np.ndarray, b: np.ndarray) -> float:
    """Pearson correlation of two equal-length float vectors (clamped to [-1, 1])."""
    da = a - a.mean()
    db = b - b.mean()
    var_a = float(np.dot(da, da))
    var_b = float(np.dot(db, db))
    if var_a == 0.0 or var_b == 0.0:
        raise DegenerateImage("correlation is undefined for a zero-variance input")
    rho = float(np.dot(da, db)) / math.sqrt(var_a * var_b)
    return min(1.0, max(-1.0, rho))


def _check_dims(a: GrayImage, b: GrayImage):
    if a.pixels.shape != b.pixels.shape:
        raise DimensionMismatch(
            f"image dimensions differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )


def correlation(a: GrayImage, b: GrayImage) -> float:
    """Pearson correlation over all pixels of two same-sized images.

    The per-pixel normalization factors cancel between numerator and
    denominator, so rectangular images are handled identically to square
    ones.  Raises DegenerateImage if either input is constant.
    """
    _check_dims(a, b)
    return _pearson(a.pixels.ravel().astype(float), b.pixels.ravel().astype(float))


def mse(a: GrayImage, b: GrayImage) -> float:
    """Mean squared gray-level error between two same-sized images."""
    _check_dims(a, b)
    diff = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    return float(int(np.dot(diff.ravel(), diff.ravel()))) / a.size


def psnr(mse_value: float) -> float:
    """Peak signal-to-noise ratio in dB: ``20 log10(255 / sqrt(mse))``.

    A zero MSE maps to the distinguished INFINITE value rather than an error,
    since perfect segmentations of few-valued images are reachable.
    """
    if mse_value < 0:
        raise InvalidParams(f"mse must be non-negative, got {mse_value}")
    if mse_value == 0.0:
        return INFINITE
    return 20.0 * math.log10(255.0 / math.sqrt(mse_value))


def quality_report(original: GrayImage, segmented: GrayImage) -> QualityReport:
    """Evaluate all three measures for one original/segmented pair."""
    err = mse(original, segmented)
    return QualityReport(
        correlation=correlation(original, segmented),
        mse=err,
        psnr=psnr(err),
    )
