"""``splitfractal`` command line: generate, iterate, member, verify, check-lemma, render.

Exit codes: 0 success, 1 property failure or undecided verdict, 2 bad input
or resource cap, 3 I/O error, 64 usage error.
"""
import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import codec
from .algebra import Family
from .carpet import (
    DEFAULT_DEPTH,
    q_meets_split_carpet,
    rect_meets_carpet,
    sc_member,
    sc_witness,
    sierpinski_level,
    split_carpet_level,
    triadic_rectangles,
)
from .errors import InconsistencyError, PreconditionError, ResourceLimitError, SplitFractalError
from .exact import as_rational
from .ifs import DEFAULT_CAP, BUILTIN_NAMES, PointCloud, builtin, iterate
from .render import RenderSpec, render_svg
from .spaces import BasicSquare, QuadPoint
from .verify import attractor_certificate, default_seeds

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO, EXIT_USAGE = 0, 1, 2, 3, 64
CAP_ENV = "SPLITFRACTAL_MAX_PIECES"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


def _level(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if k < 0:
        raise argparse.ArgumentTypeError("level must be nonnegative")
    return k


def _positive(text: str) -> int:
    k = _level(text)
    if k == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return k


# -- I/O helpers ----------------------------------------------------------------------

def _load_json(text: str):
    """Inline JSON, ``@path`` for a file, or ``-`` for stdin."""
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"malformed JSON: {exc}") from exc


def _write(text: str, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".splitfractal-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _piece_cap(args) -> int:
    if args.max_pieces is not None:
        return args.max_pieces
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return _positive(env)
        except argparse.ArgumentTypeError:
            raise PreconditionError(f"{CAP_ENV} must be a positive integer, got {env!r}")
    return DEFAULT_CAP


def _point_cap(args) -> int:
    return DEFAULT_CAP if args.max_points is None else args.max_points


def _system(text: str):
    if text.lstrip().startswith(("{", "[", "@")):
        return codec.ifs_from_json(_load_json(text))
    return builtin(text)


# -- subcommands ------------------------------------------------------------------------

def cmd_generate(args) -> int:
    cap = _piece_cap(args)
    if args.construction:
        make = split_carpet_level if args.construction == "split-carpet" else sierpinski_level
        doc = codec.carpet_to_json(make(args.level, cap))
    else:
        F = _system(args.system)
        doc = codec.family_to_json(iterate(F, Family.full(F.space), args.level, cap))
        doc["level"] = args.level
    _write(codec.dumps(doc), args.out)
    return EXIT_OK


def _seed(obj, space: str):
    if isinstance(obj, dict) and "pieces" in obj:
        return codec.family_from_json(obj)
    if isinstance(obj, dict) and "points" in obj:
        return codec.cloud_from_json(obj)
    points = obj if isinstance(obj, list) else [obj]
    points = [codec.point_from_json(p) for p in points]
    spaces = {codec.point_space(p) for p in points}
    if spaces != {space}:
        raise PreconditionError(f"seed lives in {', '.join(sorted(spaces))}, system acts on {space}")
    return PointCloud(space, frozenset(points))


def cmd_iterate(args) -> int:
    F = _system(args.system)
    K = _seed(_load_json(args.seed), F.space)
    if isinstance(K, PointCloud):
        out = codec.cloud_to_json(iterate(F, K, args.n, _point_cap(args)))
    else:
        out = codec.family_to_json(iterate(F, K, args.n, _piece_cap(args)))
    _write(codec.dumps(out), args.out)
    return EXIT_OK


def cmd_member(args) -> int:
    p = codec.point_from_json(_load_json(args.point))
    if not isinstance(p, QuadPoint):
        raise PreconditionError("membership in the split carpet needs a split-square point {x, y, t}")
    print("in" if sc_member(p) else "out")
    return EXIT_OK


def _seeds(spec: str, space: str):
    if spec.startswith("grid:"):
        try:
            return default_seeds(space, _positive(spec[5:]))
        except argparse.ArgumentTypeError as exc:
            raise PreconditionError(f"seed grid {spec!r}: {exc}")
    return list(_seed(_load_json(spec), space).sorted())


def cmd_verify(args) -> int:
    F = _system(args.system)
    seeds = _seeds(args.seeds, F.space)
    report = attractor_certificate(F, seeds, args.grid_level, args.horizon,
                                   attractor=args.attractor, cap=_point_cap(args))
    _write(codec.dumps(codec.report_to_json(report)), args.out)
    n0 = "none" if report.n0 is None else report.n0
    print(f"{report.system}: {report.verdict} (n0={n0}, grid level {report.grid_level}, "
          f"horizon {report.horizon}, {len(seeds)} seeds)", file=sys.stderr)
    return EXIT_OK if report.certified else EXIT_FAIL


def _lemma_violation(a, b, c, d, depth: int):
    """None when the rectangle passes every check, else a description."""
    B = BasicSquare(a, b, c, d)
    try:
        meets = q_meets_split_carpet(B, depth)
    except InconsistencyError as exc:
        return f"cross-depth check: {exc}"
    witness = sc_witness(B, depth)
    if witness is not None and not rect_meets_carpet(a, b, c, d):
        return f"{witness} lies in {B} n SC but the open rectangle misses C"
    if meets and witness is None:
        return f"open rectangle meets C but no point of {B} n SC was found"
    return None


def cmd_check_lemma(args) -> int:
    depth = max(args.depth, args.level)
    rects = triadic_rectangles(args.level)
    meeting, bad = 0, []
    for a, b, c, d in rects:
        problem = _lemma_violation(a, b, c, d, depth)
        if problem:
            bad.append(problem)
        elif rect_meets_carpet(a, b, c, d):
            meeting += 1
    print(f"level {args.level}: scanned {len(rects)} rectangles, {meeting} meet SC, "
          f"{len(bad)} counterexamples")
    for line in bad:
        print(f"counterexample: {line}")
    return EXIT_FAIL if bad else EXIT_OK


def _size(text: str):
    try:
        w, h = text.lower().split("x")
        return _positive(w), _positive(h)
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(f"size must look like 600x600, got {text!r}")


def _offset(text: str):
    try:
        ox, oy = text.split(",")
        return as_rational(ox), as_rational(oy)
    except (ValueError, TypeError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"offset must look like 1/25,1/25, got {text!r}")


def cmd_render(args) -> int:
    path = args.family if args.family == "-" else "@" + args.family
    _, pieces = codec.family_pieces_from_json(_load_json(path))
    spec = RenderSpec(args.style, args.size[0], args.size[1], args.offset,
                      stroke=not args.no_stroke, fill=not args.no_fill, markers=not args.no_markers)
    _write(render_svg(pieces, spec), args.out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="splitfractal", description="Exact split-carpet and split-space IFS toolkit.")
    p.add_argument("--max-pieces", type=_positive, default=None,
                   help=f"cap on family sizes (default {DEFAULT_CAP}, or ${CAP_ENV})")
    p.add_argument("--max-points", type=_positive, default=None,
                   help=f"cap on point-cloud sizes (default {DEFAULT_CAP})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    systems = ", ".join(n.replace("_", "-") for n in BUILTIN_NAMES)

    g = sub.add_parser("generate", help="carpet approximants or F^k of the full space")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--construction", choices=("split-carpet", "sierpinski"))
    src.add_argument("--system", help=f"builtin ({systems}) or custom IFS JSON")
    g.add_argument("--level", type=_level, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    it = sub.add_parser("iterate", help="apply the Hutchinson operator n times")
    it.add_argument("--system", required=True)
    it.add_argument("--seed", required=True, help="point, point list, cloud or family JSON")
    it.add_argument("--n", type=_level, required=True)
    it.add_argument("--out")
    it.set_defaults(func=cmd_iterate)

    m = sub.add_parser("member", help="split-carpet membership of a point")
    m.add_argument("point", help='e.g. {"x":"1/3","y":"1/3","t":2}')
    m.set_defaults(func=cmd_member)

    v = sub.add_parser("verify", help="finite-horizon strict-attractor certificate")
    v.add_argument("--system", required=True)
    v.add_argument("--grid-level", type=_level, default=1)
    v.add_argument("--horizon", type=_level, default=4)
    v.add_argument("--seeds", default="grid:5", help="grid:D or point-list JSON")
    v.add_argument("--attractor", help="override the system's attractor label")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check-lemma", help="scan all triadic rectangles of a grid")
    c.add_argument("--level", type=_level, required=True)
    c.add_argument("--depth", type=_level, default=DEFAULT_DEPTH)
    c.set_defaults(func=cmd_check_lemma)

    r = sub.add_parser("render", help="SVG figure of a square family")
    r.add_argument("family", help="family JSON file, or - for stdin")
    r.add_argument("--style", choices=("four_sheet_offset", "flat"), default="four_sheet_offset")
    r.add_argument("--size", type=_size, default=(600, 600))
    r.add_argument("--offset", type=_offset, default=(Fraction(1, 25), Fraction(1, 25)))
    r.add_argument("--no-stroke", action="store_true")
    r.add_argument("--no-fill", action="store_true")
    r.add_argument("--no-markers", action="store_true")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    except SystemExit as exc:   # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"splitfractal: resource cap: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as exc:
        print(f"splitfractal: inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"splitfractal: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SplitFractalError, ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        print(f"splitfractal: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
