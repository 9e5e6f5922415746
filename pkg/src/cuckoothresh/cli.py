"""Command-line interface: ``segment``, ``oracle`` and ``metrics`` subcommands.

Summary line grammar (stable, machine-parseable; floats use 17 significant
digits, infinity prints as ``inf``)::

    segment/oracle:  levels=<x> rho=<r> mse=<m> psnr=<p> thresholds=[t1,t2,...]
    metrics:         rho=<r> mse=<m> psnr=<p>

Exit codes: 0 success, 1 I/O or validation failure (including bad flags),
2 constant input image (degenerate variance, correlation undefined).
"""

import argparse
import hashlib
import sys

from .cuckoo import SearchParams, search
from .errors import CuckooThreshError, DegenerateImage, TooLarge
from .exhaustive import DEFAULT_MAX_COMBINATIONS, combination_count, exhaustive_best
from .image import histogram
from .levy import LevyParams
from .metrics import quality_report
from .pgmio import read_pgm, read_pgm_file, write_pgm_file
from .report import write_report
from .thresholding import apply_class_map

_U64 = 2**64


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the CLI contract reserves
    # 2 for degenerate images, so remap flag problems to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _summary(levels: int, quality, thresholds) -> str:
    ts = ",".join(str(t) for t in thresholds)
    return (
        f"levels={levels} rho={_fmt(quality.correlation)} mse={_fmt(quality.mse)} "
        f"psnr={_fmt(quality.psnr)} thresholds=[{ts}]"
    )


def _parse_seed(text: str) -> int:
    if text == "random":
        import secrets

        return secrets.randbits(64)
    try:
        seed = int(text)
    except ValueError:
        raise CuckooThreshError(f"--seed must be an unsigned 64-bit integer or 'random', got {text!r}")
    if not 0 <= seed < _U64:
        raise CuckooThreshError(f"--seed must lie in [0, 2^64), got {seed}")
    return seed


def _add_segment(sub):
    p = sub.add_parser("segment", help="search for thresholds and write the segmented image")
    p.add_argument("--input", required=True, help="input PGM image (P2 or P5, maxval 255)")
    p.add_argument("--levels", required=True, type=int, help="number of thresholds; classes = levels + 1")
    p.add_argument("--nests", type=int, default=20, help="population size (default 20)")
    p.add_argument("--generations", type=int, default=50, help="generation count (default 50)")
    p.add_argument("--pa", type=float, default=0.25, help="abandonment fraction (default 0.25)")
    p.add_argument("--beta", type=float, default=1.5, help="Levy stability index in (0,2) (default 1.5)")
    p.add_argument("--alpha", type=float, default=1.0, help="Levy step scale (default 1.0)")
    p.add_argument("--seed", default="0", help="unsigned 64-bit seed, or 'random' (default 0)")
    p.add_argument("--output", help="where to write the segmented PGM")
    p.add_argument("--report", help="where to write the run report")
    p.add_argument("--trace-csv", help="where to write the best-fitness trace as CSV")
    return p


def _add_oracle(sub):
    p = sub.add_parser("oracle", help="exhaustive optimum over all threshold tuples")
    p.add_argument("--input", required=True)
    p.add_argument("--levels", required=True, type=int)
    p.add_argument(
        "--max-combinations",
        type=int,
        default=DEFAULT_MAX_COMBINATIONS,
        help=f"enumeration budget on C(255, levels) (default {DEFAULT_MAX_COMBINATIONS})",
    )
    p.add_argument("--workers", type=int, default=1, help="enumeration threads (default 1)")
    return p


def _add_metrics(sub):
    p = sub.add_parser("metrics", help="correlation, MSE and PSNR of an image pair")
    p.add_argument("--original", required=True)
    p.add_argument("--segmented", required=True)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cuckoothresh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    _add_segment(sub)
    _add_oracle(sub)
    _add_metrics(sub)
    return parser


def cmd_segment(args) -> int:
    seed = _parse_seed(args.seed)
    with open(args.input, "rb") as fh:
        raw = fh.read()
    image = read_pgm(raw)
    params = SearchParams(
        levels=args.levels,
        nests=args.nests,
        generations=args.generations,
        pa=args.pa,
        levy=LevyParams(beta=args.beta, alpha=args.alpha),
        seed=seed,
    )
    report = search(histogram(image), params)
    segmented = apply_class_map(image, report.best.class_map)
    quality = quality_report(image, segmented)
    if args.output:
        write_pgm_file(args.output, segmented)
    if args.report:
        digest = hashlib.sha256(raw).hexdigest()
        with open(args.report, "wb") as fh:
            fh.write(write_report(report, quality, input_sha256=digest))
    if args.trace_csv:
        with open(args.trace_csv, "w", encoding="ascii") as fh:
            fh.write("generation,best_fitness\n")
            fh.writelines(f"{gen},{_fmt(fit)}\n" for gen, fit in enumerate(report.trace))
    print(_summary(args.levels, quality, report.best.thresholds))
    return 0


def cmd_oracle(args) -> int:
    image = read_pgm_file(args.input)
    try:
        result = exhaustive_best(
            histogram(image),
            args.levels,
            max_combinations=args.max_combinations,
            workers=args.workers,
        )
    except TooLarge as exc:
        total = combination_count(256, args.levels)
        print(
            f"error: {exc} (full solution space: C(256, {args.levels}) = {total} candidate solutions)",
            file=sys.stderr,
        )
        return 1
    segmented = apply_class_map(image, result.class_map)
    quality = quality_report(image, segmented)
    print(_summary(args.levels, quality, result.thresholds))
    return 0


def cmd_metrics(args) -> int:
    original = read_pgm_file(args.original)
    segmented = read_pgm_file(args.segmented)
    try:
        quality = quality_report(original, segmented)
    except DegenerateImage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"rho={_fmt(quality.correlation)} mse={_fmt(quality.mse)} psnr={_fmt(quality.psnr)}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"segment": cmd_segment, "oracle": cmd_oracle, "metrics": cmd_metrics}[args.command]
    try:
        return handler(args)
    except DegenerateImage as exc:
        print(f"error: degenerate input, {exc}", file=sys.stderr)
        return 2
    except (CuckooThreshError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
