"""Multilevel grayscale image thresholding by cuckoo search with Levy flights.

Segments an 8-bit image into ``x + 1`` classes by picking ``x`` thresholds
that maximize the correlation between the original and the segmented image.
The search runs entirely in the 256-bin histogram domain, so its cost is
independent of image size; pixel-domain metrics (correlation, MSE, PSNR) and
an exhaustive brute-force optimizer provide independent validation paths.
"""

from .cuckoo import SearchParams, SearchReport, abandon_worst, propose_cuckoo, search
from .errors import (
    BadMagic,
    CuckooThreshError,
    DegenerateImage,
    DimensionMismatch,
    InvalidArgs,
    InvalidBeta,
    InvalidParams,
    MalformedHeader,
    TooLarge,
    TooManyLevels,
    TruncatedData,
    Unrepairable,
    UnsupportedMaxval,
    ValueOutOfRange,
)
from .exhaustive import combination_count, exhaustive_best
from .image import GrayImage, Histogram, histogram, new_image
from .levy import LevyParams, levy_step, levy_steps, mantegna_sigma
from .metrics import INFINITE, QualityReport, correlation, mse, psnr, quality_report
from .pgmio import (
    load_sample_image,
    read_pgm,
    read_pgm_file,
    write_pgm,
    write_pgm_file,
)
from .pipeline import segment_image
from .report import parse_report, write_report
from .rng import RngState, make_rng
from .thresholding import (
    ClassMap,
    SegmentationResult,
    ThresholdSet,
    apply_class_map,
    class_representatives,
    fitness_from_histogram,
    random_threshold_set,
    repair,
)

__version__ = "0.1.0"

__all__ = [
    "BadMagic",
    "ClassMap",
    "CuckooThreshError",
    "DegenerateImage",
    "DimensionMismatch",
    "GrayImage",
    "Histogram",
    "INFINITE",
    "InvalidArgs",
    "InvalidBeta",
    "InvalidParams",
    "LevyParams",
    "MalformedHeader",
    "QualityReport",
    "RngState",
    "SearchParams",
    "SearchReport",
    "SegmentationResult",
    "ThresholdSet",
    "TooLarge",
    "TooManyLevels",
    "TruncatedData",
    "Unrepairable",
    "UnsupportedMaxval",
    "ValueOutOfRange",
    "abandon_worst",
    "apply_class_map",
    "class_representatives",
    "combination_count",
    "correlation",
    "exhaustive_best",
    "fitness_from_histogram",
    "histogram",
    "levy_step",
    "levy_steps",
    "load_sample_image",
    "make_rng",
    "mantegna_sigma",
    "mse",
    "new_image",
    "parse_report",
    "propose_cuckoo",
    "psnr",
    "quality_report",
    "random_threshold_set",
    "read_pgm",
    "read_pgm_file",
    "repair",
    "search",
    "segment_image",
    "write_pgm",
    "write_pgm_file",
    "write_report",
]
