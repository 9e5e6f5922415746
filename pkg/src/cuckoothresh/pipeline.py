"""End-to-end segmentation convenience shared by the CLI and the demo scripts."""

from .cuckoo import SearchParams, search
from .image import GrayImage, histogram
from .levy import LevyParams
from .metrics import quality_report
from .thresholding import apply_class_map


def segment_image(
    image: GrayImage,
    levels: int,
    nests: int = 20,
    generations: int = 50,
    pa: float = 0.25,
    beta: float = 1.5,
    alpha: float = 1.0,
    seed: int = 0,
):
    """Search for thresholds on ``image`` and apply the best ones.

    Returns ``(segmented, report, quality)``: the segmented image, the full
    :class:`~cuckoothresh.cuckoo.SearchReport`, and the pixel-domain
    :class:`~cuckoothresh.metrics.QualityReport` of the pair.
    """
    params = SearchParams(
        levels=levels,
        nests=nests,
        generations=generations,
        pa=pa,
        levy=LevyParams(beta=beta, alpha=alpha),
        seed=seed,
    )
    report = search(histogram(image), params)
    segmented = apply_class_map(image, report.best.class_map)
    return segmented, report, quality_report(image, segmented)
