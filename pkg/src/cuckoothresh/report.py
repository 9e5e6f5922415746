"""Plain-text run reports with a stable, versioned key-value schema.

Schema (version 1): one ``key: value`` pair per line, in fixed order, then a
``trace:`` marker followed by one ``generation,best_fitness`` CSV row per
generation.  Floats are serialized with 17 significant digits so parsing the
decimal text recovers the exact binary value.  Identical inputs always
produce identical bytes, which makes reports suitable for golden-file tests.

Keys: schema_version, levels, thresholds, representatives, fitness,
correlation, mse, psnr, seed, nests, generations, pa, beta, alpha,
evaluations, input_sha256 (optional, "-" when absent).
"""

from .cuckoo import SearchReport
from .errors import MalformedHeader
from .metrics import QualityReport

SCHEMA_VERSION = 1


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def write_report(report: SearchReport, quality: QualityReport, input_sha256: str = None) -> bytes:
    """Serialize one search run plus its quality metrics."""
    p = report.params
    lines = [
        f"schema_version: {SCHEMA_VERSION}",
        f"levels: {p.levels}",
        "thresholds: " + ",".join(str(t) for t in report.best.thresholds),
        "representatives: " + ",".join(str(r) for r in report.best.class_map.representatives),
        f"fitness: {_fmt(report.best.fitness)}",
        f"correlation: {_fmt(quality.correlation)}",
        f"mse: {_fmt(quality.mse)}",
        f"psnr: {_fmt(quality.psnr)}",
        f"seed: {p.seed}",
        f"nests: {p.nests}",
        f"generations: {p.generations}",
        f"pa: {_fmt(p.pa)}",
        f"beta: {_fmt(p.levy.beta)}",
        f"alpha: {_fmt(p.levy.alpha)}",
        f"evaluations: {report.evaluations}",
        f"input_sha256: {input_sha256 if input_sha256 else '-'}",
        "trace:",
    ]
    lines.extend(f"{gen},{_fmt(fit)}" for gen, fit in enumerate(report.trace))
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_report(data: bytes) -> dict:
    """Parse a report back into typed fields (inverse of :func:`write_report`)."""
    text = data.decode("ascii")
    lines = text.splitlines()
    fields = {}
    trace = []
    in_trace = False
    for line in lines:
        if not line:
            continue
        if in_trace:
            gen, _, fit = line.partition(",")
            trace.append((int(gen), float(fit)))
            continue
        if line == "trace:":
            in_trace = True
            continue
        key, sep, value = line.partition(": ")
        if not sep:
            raise MalformedHeader(f"unparseable report line: {line!r}")
        fields[key] = value
    try:
        out = {
            "schema_version": int(fields["schema_version"]),
            "levels": int(fields["levels"]),
            "thresholds": tuple(int(t) for t in fields["thresholds"].split(",")),
            "representatives": tuple(int(r) for r in fields["representatives"].split(",")),
            "fitness": float(fields["fitness"]),
            "correlation": float(fields["correlation"]),
            "mse": float(fields["mse"]),
            "psnr": float(fields["psnr"]),
            "seed": int(fields["seed"]),
            "nests": int(fields["nests"]),
            "generations": int(fields["generations"]),
            "pa": float(fields["pa"]),
            "beta": float(fields["beta"]),
            "alpha": float(fields["alpha"]),
            "evaluations": int(fields["evaluations"]),
            "input_sha256": None if fields["input_sha256"] == "-" else fields["input_sha256"],
            "trace": trace,
        }
    except KeyError as missing:
        raise MalformedHeader(f"report is missing field {missing}") from None
    return out
