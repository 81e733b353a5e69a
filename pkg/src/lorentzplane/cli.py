"""Command-line entry point: ``analyze``, ``verify``, ``conjugate``, ``render``."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import Degenerate
from .harness import CHARACTERS, SuiteConfig, run_suite
from .render import render_svg
from .scene import ParseError, ErrorLog, analyze, conjugate_fragment, dumps, load_scene
from .triangle import require_nondegenerate

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lorentzplane", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a scene and report its centers and residuals")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--tolerance", type=_positive_float, default=1e-9)

    p = sub.add_parser("verify", help="run the randomized theorem suite")
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--character", choices=CHARACTERS, default="both")
    p.add_argument("--tolerance", type=_positive_float, default=None, help="override every per-property tolerance")
    p.add_argument("--scale", type=_positive_float, default=10.0)
    p.add_argument("--lightcone-margin", type=_positive_float, default=0.05)
    p.add_argument("--shape-margin", type=_positive_float, default=1e-3, help="reject sliver triangles below this shape measure")
    p.add_argument("--paper-literal-s2", action="store_true", help="use the un-squared numerator in the squared sine")
    p.add_argument("--property", action="append", dest="properties", help="restrict to named properties")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--output", help="write the JSON report here instead of stdout")

    p = sub.add_parser("conjugate", help="isogonal conjugate of the scene point")
    p.add_argument("--input", required=True)
    p.add_argument("--output")

    p = sub.add_parser("render", help="draw the scene as SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--samples", type=_positive_int, default=None)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary(report) -> str:
    lines = []
    for p in report.properties:
        mark = "PASS" if p.passed else "FAIL"
        lines.append(f"{mark} {p.name:28s} trials={p.trials:<6d} max={p.max_residual:.3e} tol={p.tolerance:.0e}")
    lines.append("all properties passed" if report.passed else "some properties FAILED")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> int:
    scene = load_scene(args.input)
    _emit(dumps(analyze(scene, args.tolerance)), args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        config = SuiteConfig(
            seed=args.seed,
            trials=args.trials,
            character=args.character,
            scale=args.scale,
            tol=args.tolerance,
            lightcone_margin=args.lightcone_margin,
            shape_margin=args.shape_margin,
            paper_literal_s2=args.paper_literal_s2,
            properties=tuple(args.properties) if args.properties else None,
        )
    except ValueError as exc:
        print(f"lorentzplane verify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_suite(config, workers=args.workers)
    _emit(report.to_json() + "\n", args.output)
    sys.stderr.write(_summary(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_conjugate(args) -> int:
    scene = load_scene(args.input)
    if scene.point is None:
        raise ParseError("conjugate needs a scene with a 'point'")
    require_nondegenerate(scene.triangle)
    errors = ErrorLog()
    frag = conjugate_fragment(scene.form, scene.triangle, scene.point, errors)
    frag["errors"] = list(errors)
    _emit(dumps(frag), args.output)
    return EXIT_OK


def _cmd_render(args) -> int:
    scene = load_scene(args.input)
    require_nondegenerate(scene.triangle)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(render_svg(scene, args.samples))
    return EXIT_OK


COMMANDS = {
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "conjugate": _cmd_conjugate,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"lorentzplane {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"lorentzplane {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Degenerate as exc:
        print(f"lorentzplane {args.command}: degenerate geometry: {exc}", file=sys.stderr)
        json.dump({"error": "Degenerate", "message": str(exc)}, sys.stdout)
        sys.stdout.write("\n")
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
