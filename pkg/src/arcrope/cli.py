"""Command-line entry point: ``arcrope <command> ...``.

Exit status is 0 on success, 1 when an input fails validation and 2 on
parse or I/O errors. Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import sys

from . import arcpres, bounds, builder, connectsum, formats, mesh, thickness
from .curve import check_continuity, length

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2

_INVALID = (
    arcpres.ArcPresentationError,
    arcpres.AlphaTooLarge,
    builder.AlphaTooSmall,
    connectsum.NotBuilderOutput,
    connectsum.NotPrepared,
    connectsum.OverlapDetected,
    thickness.CurveNotClosed,
    thickness.NoCriticalChord,
    mesh.RadiusTooLarge,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _presentation(path: str):
    return formats.parse_presentation(_read(path))


def cmd_validate(args) -> int:
    A = _presentation(args.file)
    ls = arcpres.link_structure(A)
    print(f"ok alpha={A.alpha} components={ls.components}")
    return EXIT_OK


def cmd_skip(args) -> int:
    print(arcpres.skip(_presentation(args.file)))
    return EXIT_OK


def cmd_extremal(args) -> int:
    _write(args.output, formats.emit_presentation(arcpres.extremal(args.alpha)))
    return EXIT_OK


def cmd_maxskip(args) -> int:
    print(arcpres.max_skip_oracle(args.alpha))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.file is not None:
        A = _presentation(args.file)
        s = arcpres.skip(A)
        value = builder.prop1_bound(A.alpha, s)
        if args.report:
            print(f"alpha={A.alpha}\nskip={s}\nprop1_value={value:.10g}")
        else:
            print(f"{value:.2f}")
        return EXIT_OK
    cs = args.crossing
    if len(cs) > 1:
        rep = bounds.composite_report(cs)
        value = rep.thm1_value if args.exact else rep.thm2_value
    else:
        rep = bounds.bound_report(cs[0])
        value = bounds.thm1_bound(cs[0], exact=args.exact)
    print(rep.format_block() if args.report else f"{value:.2f}")
    return EXIT_OK


def cmd_build(args) -> int:
    A = _presentation(args.file)
    c = builder.build(A)
    bad = check_continuity(c)
    if bad:
        print(f"error: {len(bad)} junction(s) not tangent-matched", file=sys.stderr)
        return EXIT_INVALID
    print(
        f"alpha={A.alpha} skip={arcpres.skip(A)} length={length(c):.12g} "
        f"bound={builder.prop1_bound(A.alpha, arcpres.skip(A)):.12g}",
        file=sys.stderr,
    )
    if args.output is not None:
        _write(args.output, formats.emit_curve(c))
    if args.mesh is not None:
        _write(args.mesh, mesh.export_mesh(c, m=args.segments, r=args.radius, density=args.density).to_obj())
    if args.output is None and args.mesh is None:
        _write(None, formats.emit_curve(c))
    return EXIT_OK


def cmd_thickness(args) -> int:
    c = formats.parse_curve(_read(args.curve))
    rep = thickness.thickness_report(c, density=args.density, refine_iters=args.refine)
    for d in rep.diagnostics:
        print(f"warning: {d}", file=sys.stderr)
    print(rep.format())
    return EXIT_OK


def cmd_connect_sum(args) -> int:
    c1 = formats.parse_curve(_read(args.curve_a))
    c2 = formats.parse_curve(_read(args.curve_b))
    c1 = connectsum.straighten_extreme_floor(c1, "top")
    c2 = connectsum.straighten_extreme_floor(c2, "bottom")
    out, plan = connectsum.plan_and_join(c1, c2)
    if not args.no_verify:
        connectsum.verify_join(out, args.density, 1 - 1e-3)
    print(f"case={plan.case} saved={plan.saved_length:.12g} length={length(out):.12g}", file=sys.stderr)
    _write(args.output, formats.emit_curve(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arcrope", description="Ropelength bounds from arc-presentations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a presentation file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("skip", help="print the total skip of a presentation")
    s.add_argument("file")
    s.set_defaults(func=cmd_skip)

    s = sub.add_parser("extremal", help="emit a presentation of maximal skip")
    s.add_argument("--alpha", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("maxskip-oracle", help="exhaustive maximum skip over single cycles")
    s.add_argument("--alpha", type=int, required=True)
    s.set_defaults(func=cmd_maxskip)

    s = sub.add_parser("bound", help="ropelength upper bounds")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--crossing", type=int, nargs="+", metavar="C", help="crossing number(s) of the prime factors")
    g.add_argument("--file", help="presentation file; prints the prism-construction bound")
    s.add_argument("--exact", action="store_true", help="use unrounded coefficients")
    s.add_argument("--report", action="store_true", help="print every intermediate quantity")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("build", help="build the prism curve of a presentation")
    s.add_argument("file")
    s.add_argument("-o", "--output", help="curve file to write")
    s.add_argument("--mesh", help="OBJ tube mesh to write")
    s.add_argument("--density", type=float, default=10.0, help="mesh samples per unit length")
    s.add_argument("--segments", type=int, default=16, help="mesh cross-section vertices")
    s.add_argument("--radius", type=float, default=1.0, help="mesh tube radius")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("thickness", help="estimate the thickness of a curve file")
    s.add_argument("curve")
    s.add_argument("--density", type=float, default=thickness.DEFAULT_DENSITY)
    s.add_argument("--refine", type=int, default=thickness.DEFAULT_REFINE)
    s.set_defaults(func=cmd_thickness)

    s = sub.add_parser("connect-sum", help="join two built curves, A below B")
    s.add_argument("curve_a")
    s.add_argument("curve_b")
    s.add_argument("-o", "--output")
    s.add_argument("--density", type=float, default=50.0, help="sampling for the thickness check")
    s.add_argument("--no-verify", action="store_true")
    s.set_defaults(func=cmd_connect_sum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        return args.func(args)
    except formats.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except _INVALID as e:
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
