"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 I/O error, 4 pipeline
validation error.
"""

import argparse
import sys

from . import cipher, keylang, metrics, pgm
from .carrier import KeywordError, build_carrier
from .cipher import PRESET_VARIANTS, PipelineValidationError, preset_pipeline
from .grid_scan import ScanSpec, generate_path
from .keylang import PipelineSyntaxError, format_pipeline, parse_pipeline

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _scan_spec(text):
    try:
        return ScanSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    parser = _CliParser(
        prog="scancipher",
        description="Permutation-cipher toolkit for 8-bit grayscale PGM images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("encrypt", "decrypt"):
        p = sub.add_parser(name, help=f"{name} a PGM image with a pipeline key")
        p.add_argument("--input", required=True, help="input PGM file")
        p.add_argument("--output", required=True, help="output PGM file")
        p.add_argument("--pipeline", help="pipeline expression text")
        p.add_argument("--preset", choices=list(PRESET_VARIANTS),
                       help="use a preset pipeline instead of --pipeline")
        p.add_argument("--scan", type=_scan_spec, default=ScanSpec.parse("D0"),
                       help="scan spec for presets, e.g. D0 (default)")
        p.add_argument("--key", default="", help="keyword for presets")

    p = sub.add_parser("metrics", help="report distortion metrics for an image")
    p.add_argument("--input", required=True)
    p.add_argument("--reference", help="second image for NPCR/UACI")
    p.add_argument("--format", choices=["text", "structured"], default="text")

    p = sub.add_parser("scan-path", help="print a scan visit order, one cell per line")
    p.add_argument("--scan", type=_scan_spec, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)

    p = sub.add_parser("carrier", help="write a keyword-derived carrier image")
    p.add_argument("--key", required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--output", required=True)

    p = sub.add_parser("presets", help="print the five preset pipeline expressions")
    p.add_argument("--scan", type=_scan_spec, default=ScanSpec.parse("D0"))
    p.add_argument("--key", default="UniversityOfMysore")

    return parser


def _resolve_pipeline(args, parser):
    if (args.pipeline is None) == (args.preset is None):
        parser.error("exactly one of --pipeline or --preset is required")
    if args.pipeline is not None:
        return parse_pipeline(args.pipeline)
    if not args.key and args.preset != "a":
        parser.error(f"preset '{args.preset}' requires --key")
    return preset_pipeline(args.preset, args.scan, args.key or "A")


def _cmd_crypt(args, parser):
    expr = _resolve_pipeline(args, parser)
    img = pgm.read_pgm(args.input)
    operation = cipher.encrypt if args.command == "encrypt" else cipher.decrypt
    pgm.write_pgm(operation(img, expr), args.output)


def _cmd_metrics(args):
    img = pgm.read_pgm(args.input)
    reference = pgm.read_pgm(args.reference) if args.reference else None
    rep = metrics.report(img, reference)
    sys.stdout.write(rep.to_text() if args.format == "text" else rep.to_json())


def _cmd_scan_path(args, parser):
    if args.rows < 1 or args.cols < 1:
        parser.error("--rows and --cols must be positive")
    path = generate_path(args.scan, args.rows, args.cols)
    for r, c in path.cells():
        print(f"{r} {c}")


def _cmd_carrier(args, parser):
    if args.rows < 1 or args.cols < 1:
        parser.error("--rows and --cols must be positive")
    pgm.write_pgm(build_carrier(args.key, args.rows, args.cols), args.output)


def _cmd_presets(args):
    for variant in PRESET_VARIANTS:
        expr = preset_pipeline(variant, args.scan, args.key)
        print(f"({variant}) {format_pipeline(expr)}")


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("encrypt", "decrypt"):
            _cmd_crypt(args, parser)
        elif args.command == "metrics":
            _cmd_metrics(args)
        elif args.command == "scan-path":
            _cmd_scan_path(args, parser)
        elif args.command == "carrier":
            _cmd_carrier(args, parser)
        elif args.command == "presets":
            _cmd_presets(args)
        return 0
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except PipelineValidationError as exc:
        print(f"error: pipeline not decryptable: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except pgm.PgmFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (PipelineSyntaxError, KeywordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main():
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
