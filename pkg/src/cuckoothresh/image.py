"""8-bit grayscale image model and histogram computation.

Images are stored as immutable ``(height, width)`` uint8 arrays in row-major
order.  Everything downstream (fitness, metrics, segmentation) works either on
the pixel grid or on the 256-bin histogram derived from it.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ValueOutOfRange

GRAY_LEVELS = 256


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Validated 8-bit grayscale image.

    ``pixels`` is a read-only ``(height, width)`` uint8 array.  Instances are
    immutable after construction and safe to share between threads.
    """

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D pixel grid, got ndim={arr.ndim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionMismatch(f"image dimensions must be positive, got {arr.shape}")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ValueOutOfRange("pixel values must be integers in [0, 255]")
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueOutOfRange("pixel values must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        else:
            arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def size(self) -> int:
        return int(self.pixels.size)

    @classmethod
    def from_array(cls, array) -> "GrayImage":
        """Build an image from any 2-D integer array in [0, 255]."""
        return cls(np.asarray(array))

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(
            self.pixels, other.pixels
        )


@dataclass(frozen=True, eq=False)
class Histogram:
    """Occurrence counts of the 256 gray levels of one image."""

    counts: np.ndarray
    total: int

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.shape != (GRAY_LEVELS,):
            raise DimensionMismatch(f"histogram needs {GRAY_LEVELS} bins, got {counts.shape}")
        if counts.min(initial=0) < 0:
            raise ValueOutOfRange("histogram counts must be non-negative")
        if int(counts.sum()) != int(self.total):
            raise DimensionMismatch("histogram counts do not sum to the declared total")
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "total", int(self.total))

    def __eq__(self, other):
        if not isinstance(other, Histogram):
            return NotImplemented
        return self.total == other.total and np.array_equal(self.counts, other.counts)

    def distinct_values(self) -> np.ndarray:
        """Gray values with a nonzero count, ascending."""
        return np.flatnonzero(self.counts)


def new_image(width: int, height: int, pixels) -> GrayImage:
    """Validate and assemble an image from a flat row-major gray-value sequence.

    Raises
    ------
    DimensionMismatch
        If ``len(pixels) != width * height`` or a dimension is < 1.
    ValueOutOfRange
        If any value falls outside [0, 255] or is not an integer.
    """
    if width < 1 or height < 1:
        raise DimensionMismatch(f"image dimensions must be >= 1, got {width}x{height}")
    flat = np.asarray(pixels)
    if flat.ndim != 1:
        raise DimensionMismatch(f"pixels must be a flat sequence, got ndim={flat.ndim}")
    if flat.size != width * height:
        raise DimensionMismatch(
            f"expected {width * height} pixels for {width}x{height}, got {flat.size}"
        )
    if not np.issubdtype(flat.dtype, np.integer):
        raise ValueOutOfRange("pixel values must be integers in [0, 255]")
    if flat.size and (flat.min() < 0 or flat.max() > 255):
        raise ValueOutOfRange("pixel values must lie in [0, 255]")
    return GrayImage(flat.reshape(height, width))


def histogram(image: GrayImage) -> Histogram:
    """Count gray-level occurrences; the basis of the fast fitness path."""
    counts = np.bincount(image.pixels.ravel(), minlength=GRAY_LEVELS)
    return Histogram(counts=counts, total=image.size)
