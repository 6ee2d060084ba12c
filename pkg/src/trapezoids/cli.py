"""Command-line surface: generate, analyze, verify, render, convert.

Exit codes: 0 success (or identity holds), 1 verification failed, 2 bad
input or parameter, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import dataio, detect, svg
from .correspondence import (
    ExceptionalPairError,
    GenericRotationError,
    generic_rotation,
    verify_i2l,
)
from .generate import BOTH, FAMILY1, FAMILY2, FamilyParams
from .primitives import Interval
from .scalars import DEFAULT_TOLERANCE, EXACT, FLOAT, MixedModeError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_IO = 3


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trapezoids",
        description="Count trapezoid-forming interval pairs, detect their "
                    "underlying structures, and generate example families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a dataset for one of the example families")
    gen.add_argument("family", choices=["parallel", "pencil", "hyperboloid",
                                        "paraboloid", "subcase-ii"])
    gen.add_argument("--slope", type=_rational, default=Fraction(1))
    gen.add_argument("--k1", type=_rational, default=Fraction(0),
                     help="first intercept (parallel family)")
    gen.add_argument("--k2", type=_rational, default=Fraction(1),
                     help="second intercept (parallel family)")
    gen.add_argument("--A", type=_rational, default=Fraction(1))
    gen.add_argument("--B", type=_rational, default=Fraction(1))
    gen.add_argument("--C", type=_rational, default=Fraction(1))
    gen.add_argument("--D", type=_rational, default=Fraction(0))
    gen.add_argument("--u", type=_rational, default=Fraction(-1))
    gen.add_argument("--v", type=_rational, default=Fraction(1))
    gen.add_argument("--which", choices=[FAMILY1, FAMILY2, BOTH], default=BOTH)
    gen.add_argument("--count", type=int, default=12)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--mode", choices=[EXACT, FLOAT], default=EXACT)
    gen.add_argument("--out", required=True)

    ana = sub.add_parser("analyze", help="count pairs and detect structures")
    ana.add_argument("--in", dest="infile", required=True)
    ana.add_argument("--relation", choices=[detect.TRAPEZOID, detect.ORTHODIAGONAL,
                                            detect.RATIO], default=detect.TRAPEZOID)
    ana.add_argument("--rho", type=_rational, default=None)
    ana.add_argument("--report", help="write the report JSON here")
    ana.add_argument("--svg", help="write an SVG drawing here")
    ana.add_argument("--strategy", choices=[detect.EXHAUSTIVE, detect.SAMPLED], default=None)
    ana.add_argument("--samples", type=int, default=2000,
                     help="triple samples for the sampled strategy")
    ana.add_argument("--seed", type=int, default=0)
    ana.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)

    ver = sub.add_parser("verify", help="check the 2T = P - N counting identity")
    ver.add_argument("--in", dest="infile", required=True)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)

    ren = sub.add_parser("render", help="draw a dataset (optionally with a report overlay)")
    ren.add_argument("--in", dest="infile", required=True)
    ren.add_argument("--out", required=True)
    ren.add_argument("--report", help="overlay structures from this report")

    conv = sub.add_parser("convert", help="convert an exact dataset to float mode")
    conv.add_argument("--in", dest="infile", required=True)
    conv.add_argument("--out", required=True)
    return parser


# ---------------------------------------------------------------------------
# sampling helpers for `generate`

def _draw_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-60, 60), rng.randint(1, 6))
        if not nonzero or value != 0:
            return value


def _draw_distinct(rng, count, nonzero=False, max_tries=20000):
    out: list[Fraction] = []
    seen = set()
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise ValueError("could not draw enough distinct sample parameters")
        v = _draw_rational(rng, nonzero)
        if v in seen:
            continue
        seen.add(v)
        out.append(v)
    return out


def _sample_family(args) -> list[Interval]:
    rng = random.Random(args.seed)
    count = args.count
    if count <= 0:
        raise ValueError("--count must be positive")
    if args.family == "parallel":
        if args.k1 == args.k2:
            raise ValueError("parallel family needs two distinct intercepts (--k1 != --k2)")
        params = FamilyParams("parallel", slope=args.slope,
                              intercept1=args.k1, intercept2=args.k2)
        pairs = list(zip(_draw_distinct(rng, count), _draw_distinct(rng, count)))
        return params.build(pairs)[:count]
    if args.family == "pencil":
        if args.A == 0 and args.B == 0:
            raise ValueError("pencil family needs (A, B) != (0, 0)")
        params = FamilyParams("pencil", plane=(args.A, args.B, args.C, args.D))
        out: list[Interval] = []
        tries = 0
        while len(out) < count:
            tries += 1
            if tries > 20000:
                raise ValueError("could not sample enough pencil members")
            sample = (_draw_rational(rng), _draw_rational(rng))
            try:
                candidates = params.build([sample])
            except ValueError:
                continue
            for c in candidates:
                if c not in out:
                    out.append(c)
        return out[:count]
    if args.family == "hyperboloid":
        if 0 in (args.A, args.B, args.C):
            raise ValueError("hyperboloid semi-axes must be nonzero")
        params = FamilyParams("hyperboloid", semiaxes=(args.A, args.B, args.C),
                              which=args.which)
        need = count if args.which != BOTH else (count + 1) // 2
        ts = _draw_distinct(rng, need)
        return params.build(ts)[:count]
    if args.family == "paraboloid":
        if 0 in (args.A, args.B):
            raise ValueError("paraboloid scales must be nonzero")
        params = FamilyParams("paraboloid", semiaxes=(args.A, args.B), which=args.which)
        need = count if args.which != BOTH else (count + 1) // 2
        ts = _draw_distinct(rng, need, nonzero=True)
        return params.build(ts)[:count]
    if args.family == "subcase-ii":
        params = FamilyParams("subcase-ii", u=args.u, v=args.v, which=args.which)
        need = count if args.which != BOTH else (count + 1) // 2
        ts = _draw_distinct(rng, need, nonzero=True)
        return params.build(ts)[:count]
    raise ValueError(f"unknown family {args.family!r}")


# ---------------------------------------------------------------------------
# commands

def cmd_generate(args) -> int:
    intervals = _sample_family(args)
    if len(intervals) < args.count:
        raise ValueError("sampling produced fewer intervals than requested")
    dataio.save_dataset(args.out, intervals, args.mode)
    print(f"wrote {len(intervals)} intervals to {args.out} ({args.mode} mode)")
    return EXIT_OK


def cmd_analyze(args, argv) -> int:
    intervals, mode = dataio.load_dataset(args.infile)
    rho = args.rho
    if rho is not None and mode == FLOAT:
        rho = float(rho)
    report = detect.analyze(
        intervals,
        relation=args.relation,
        rho=rho,
        strategy=args.strategy,
        sample_size=args.samples,
        seed=args.seed,
        tol=args.tolerance,
    )
    provenance = {
        "command": "trapezoids " + " ".join(argv),
        "seed": args.seed,
        "mode": mode,
        "tolerance": args.tolerance,
    }
    report_dict = dataio.report_to_dict(report, provenance)
    counts = report.counts
    print(
        f"N={counts.n} left_only={counts.left_only} right_only={counts.right_only} "
        f"both={counts.both} total={counts.total_with_multiplicity} "
        f"threshold={counts.threshold:.3f}"
    )
    print(
        f"concurrencies={len(report.concurrencies)} "
        f"coplanarities={len(report.coplanarities)} reguli={len(report.reguli)}"
    )
    if args.report:
        dataio.save_report(args.report, report_dict)
    if args.svg:
        overlays = svg.overlays_from_report(report_dict)
        drawn = intervals
        if report.rotation is not None:
            from .correspondence import rotate_interval

            drawn = [rotate_interval(i, report.rotation) for i in intervals]
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg.render_svg(drawn, overlays))
    return EXIT_OK


def cmd_verify(args) -> int:
    intervals, _mode = dataio.load_dataset(args.infile)
    rotated = False
    try:
        report = verify_i2l(intervals, tol=args.tolerance)
    except ExceptionalPairError:
        working, rotation = generic_rotation(intervals, seed=args.seed, tol=args.tolerance)
        rotated = not rotation.is_identity
        report = verify_i2l(working, tol=args.tolerance)
    note = " (after generic rotation)" if rotated else ""
    holds = "true" if report.holds else "false"
    print(
        f"N={report.n} T={report.trapezoids} P={report.intersecting_pairs} "
        f"holds={holds}{note}"
    )
    return EXIT_OK if report.holds else EXIT_VERIFY_FAILED


def cmd_render(args) -> int:
    intervals, _mode = dataio.load_dataset(args.infile)
    overlays = []
    if args.report:
        overlays = svg.overlays_from_report(dataio.load_report(args.report))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg.render_svg(intervals, overlays))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_convert(args) -> int:
    intervals, mode = dataio.load_dataset(args.infile)
    if mode != EXACT:
        raise ValueError("convert expects an exact dataset")
    floats = [Interval(*(float(x) for x in i.as_tuple())) for i in intervals]
    dataio.save_dataset(args.out, floats, FLOAT)
    print(f"wrote {len(floats)} intervals to {args.out} (float mode)")
    return EXIT_OK


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "analyze":
            return cmd_analyze(args, argv)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "render":
            return cmd_render(args)
        if args.command == "convert":
            return cmd_convert(args)
        raise ValueError(f"unknown command {args.command!r}")
    except GenericRotationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (ValueError, MixedModeError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
