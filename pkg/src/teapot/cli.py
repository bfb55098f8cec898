"""Command-line surface: every reproduction path is one subcommand.

Growth rates are written either as exact decimal literals ("1.82" means
91/50 exactly) or as "poly:c0,c1,...,cd" for the leading root in (1, 2] of
an integer polynomial.  Reports are line-oriented key=value text; file
outputs are CSV/PGM with optional matplotlib PNG companions.  Exit codes:
0 success, 1 computation error, 2 flag error.
"""
from __future__ import annotations

import argparse
import sys

from . import atlas
from .kneading import itinerary_period, itinerary_prefix, right_limit_itinerary
from .membership import AmbiguousModulus, test_point
from .rates import GrowthRate
from .roots import all_roots, leading_root
from .series import parry_polynomial
from .words import Word


def _rate_type(text: str) -> GrowthRate:
    try:
        return GrowthRate.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid growth rate {text!r}: {exc}")


def _word_type(text: str) -> Word:
    if not text or any(c not in "01" for c in text):
        raise argparse.ArgumentTypeError(f"a word is a nonempty string over 0/1, got {text!r}")
    return Word(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teapot",
        description="Tent-map itineraries, Parry polynomials, and certified "
        "membership tests for slices of Thurston's Master Teapot.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("itinerary", help="print a prefix of It_lambda (or It+_lambda)")
    p.add_argument("--lambda", dest="rate", type=_rate_type, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--right-limit", action="store_true")

    p = sub.add_parser("parry", help="Parry polynomial of a word and its roots")
    p.add_argument("--word", type=_word_type, required=True)

    p = sub.add_parser("test-point", help="certify a point against a slice")
    p.add_argument("--lambda", dest="rate", type=_rate_type, required=True)
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, required=True)
    p.add_argument("--max-depth", type=int, default=20)

    p = sub.add_parser("render-slice", help="raster or constructive slice plot data")
    p.add_argument("--lambda", dest="rate", type=_rate_type, required=True)
    p.add_argument("--mode", choices=("certify", "constructive"), required=True)
    p.add_argument("--resolution", type=int, default=100)
    p.add_argument("--depth", type=int, default=14)
    p.add_argument("--max-word-length", type=int, default=12)
    p.add_argument(
        "--bounds",
        type=float,
        nargs=4,
        metavar=("RE_MIN", "RE_MAX", "IM_MIN", "IM_MAX"),
        default=(-1.0, 1.0, -1.0, 1.0),
    )
    p.add_argument("--out", required=True, help="PGM (certify) or CSV (constructive)")
    p.add_argument("--csv", help="also write the per-pixel CSV (certify mode)")
    p.add_argument("--plot", help="also save a matplotlib PNG")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("teapot", help="3D point cloud from kneading series roots")
    p.add_argument("--rates", type=int, default=100)
    p.add_argument("--degree", type=int, default=60)
    p.add_argument("--min", dest="lo", type=float, default=1.01)
    p.add_argument("--max", dest="hi", type=float, default=2.0)
    p.add_argument("--out", required=True)
    p.add_argument("--plot", help="also save a matplotlib PNG")

    p = sub.add_parser("asymmetry-check", help="run the slice-asymmetry computation")
    p.add_argument("--depth", type=int, default=20)

    return parser


def _cmd_itinerary(args) -> int:
    if args.length < 1:
        print("error=length must be >= 1", file=sys.stderr)
        return 1
    print(f"lambda={args.rate.describe()}")
    if args.right_limit:
        prefix = right_limit_itinerary(args.rate, args.length)
        print("right_limit=true")
        print(f"prefix={prefix}")
    else:
        it = itinerary_prefix(args.rate, args.length)
        print(f"prefix={it.letters}")
        print(
            "ambiguous_indices="
            + (",".join(str(i) for i in it.ambiguity_resolved_at) or "none")
        )
    period = itinerary_period(args.rate, args.length)
    print(f"period={period if period is not None else 'none'}")
    return 0


def _cmd_parry(args) -> int:
    p = parry_polynomial(args.word)
    print(f"word={args.word}")
    print("coefficients=" + ",".join(str(c) for c in p.coefficients))
    lr = leading_root(p)
    print(f"leading_root={lr!r}" if lr is not None else "leading_root=none")
    rs = all_roots(p)
    for r, res in zip(rs.roots, rs.residuals):
        print(f"root={r.real!r},{r.imag!r} residual={res:.3e}")
    return 0


def _cmd_test_point(args) -> int:
    z = complex(args.re, args.im)
    cert = test_point(z, args.rate, args.max_depth)
    print(f"lambda={args.rate.describe()}")
    print(f"z={args.re!r},{args.im!r}")
    print(f"verdict={cert.verdict.value}")
    print(f"method={cert.method.value}")
    print(f"depth={cert.depth}")
    print(f"margin={cert.margin!r}")
    print(f"reduction_exponent={cert.reduction_exponent}")
    return 0


def _cmd_render_slice(args) -> int:
    if args.mode == "certify":
        raster = atlas.render_slice_certified(
            args.rate,
            tuple(args.bounds),
            args.resolution,
            args.depth,
            threads=args.threads,
        )
        atlas.write_raster_pgm(args.out, raster)
        if args.csv:
            atlas.write_raster_csv(args.csv, raster)
        if args.plot:
            atlas.plot_raster(raster, args.plot)
        counts = {code: 0 for code in (0, 128, 255)}
        for c in raster.codes:
            counts[c] += 1
        print(f"out={args.out}")
        print(f"certified_out={counts[0]}")
        print(f"inconclusive={counts[128]}")
        print(f"unit_circle={counts[255]}")
        print(f"errors={raster.error_count}")
    else:
        points = atlas.render_slice_constructive(args.rate, args.max_word_length)
        atlas.write_slice_points_csv(args.out, points)
        if args.plot:
            atlas.plot_slice_points(points, args.plot)
        print(f"out={args.out}")
        print(f"points={len(points)}")
    return 0


def _cmd_teapot(args) -> int:
    cloud = atlas.teapot_cloud(args.rates, args.degree, (args.lo, args.hi))
    atlas.write_cloud_csv(args.out, cloud)
    if args.plot:
        atlas.plot_teapot(cloud, args.plot)
    print(f"out={args.out}")
    print(f"points={len(cloud.points)}")
    print(f"skipped={cloud.skipped}")
    return 0


def _cmd_asymmetry(args) -> int:
    stages = atlas.asymmetry_report(args.depth)
    for s in stages:
        status = "PASS" if s.passed else "FAIL"
        print(f"stage={s.name} status={status} detail={s.detail}")
    return 0 if all(s.passed for s in stages) else 1


_DISPATCH = {
    "itinerary": _cmd_itinerary,
    "parry": _cmd_parry,
    "test-point": _cmd_test_point,
    "render-slice": _cmd_render_slice,
    "teapot": _cmd_teapot,
    "asymmetry-check": _cmd_asymmetry,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except AmbiguousModulus as exc:
        print(f"error=ambiguous_modulus detail={exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error={exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
