"""Command-line interface: one JSON line per result on standard output.

Exit codes: 0 success, 1 domain error, 2 unknown verdict, 3 step cap, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional

from .curve import CongruentCurve, Point, contains, double, point_to_json
from .errors import CongruentError, NotOnCurve, ParseError, StepCapExceeded
from .exact import Rational, parse_rational
from .fermat import MAX_STEPS, infinite_order_witness, orbit, orbit_to_json, verify_orbit
from .oracle import DEFAULT_M_BOUND, congruent_numbers_below, is_congruent_up_to
from .plot import render_chord_figure
from .triple import make_triple, psi, psi_inv, triple_to_json

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_UNKNOWN = 2
EXIT_CAP = 3
EXIT_USAGE = 64

# Negative rationals such as "-7/10" (or comma lists of them) are values, not flags.
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise _UsageError(message)


def _rational(text: str) -> Rational:
    try:
        return parse_rational(text)
    except (ParseError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    if not re.fullmatch(r"[0-9]+", text) or int(text) < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(text)


def _nonneg_int(text: str) -> int:
    if not re.fullmatch(r"[0-9]+", text):
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")

    parser = _Parser(prog="congruent", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="bounded search for a triangle of area A")
    p.add_argument("A", type=_positive_int)
    p.add_argument("--m-bound", type=_positive_int, default=DEFAULT_M_BOUND)

    p = sub.add_parser("list", parents=[common], help="congruent numbers up to LIMIT found by the search")
    p.add_argument("limit", type=_positive_int)
    p.add_argument("--m-bound", type=_positive_int, default=DEFAULT_M_BOUND)

    p = sub.add_parser("map", parents=[common], help="triple -> curve point, or --point x y A -> triple")
    p.add_argument("--point", action="store_true", help="treat the arguments as x y A")
    p.add_argument("values", nargs="+", metavar="VALUE")

    p = sub.add_parser("fermat", parents=[common], help="orbit of a triple under Fermat's step")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=_rational)
    p.add_argument("A", type=_positive_int)
    p.add_argument("--steps", type=_nonneg_int, default=5)

    p = sub.add_parser("double", parents=[common], help="iterated doubling of a curve point")
    p.add_argument("x", type=_rational)
    p.add_argument("y", type=_rational)
    p.add_argument("A", type=_positive_int)
    p.add_argument("--times", type=_positive_int, default=5, help="number of points listed")

    p = sub.add_parser("plot", parents=[common], help="SVG of C_A with the chord construction")
    p.add_argument("A", type=_positive_int)
    p.add_argument("--points", nargs="+", default=[], metavar="X,Y", help="points as x,y pairs")
    p.add_argument("--out", type=Path, default=Path("curve.svg"))
    return parser


def _emit(obj, pretty: bool) -> None:
    if pretty:
        print(_render_pretty(obj))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def _render_pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if all(not isinstance(v, (dict, list)) for v in obj.values()):
            return pad + "  ".join(f"{k}={v}" for k, v in obj.items())
        rows = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                rows.append(f"{pad}{k}:")
                rows.append(_render_pretty(v, indent + 1))
            else:
                rows.append(f"{pad}{k:<14}{v}")
        return "\n".join(rows)
    if isinstance(obj, list):
        return "\n".join(f"{pad}[{i}] " + _render_pretty(v, 0) for i, v in enumerate(obj))
    return pad + str(obj)


def _cmd_check(args) -> int:
    verdict = is_congruent_up_to(args.A, args.m_bound)
    _emit(verdict.to_json(), args.pretty)
    return EXIT_OK if verdict.is_congruent else EXIT_UNKNOWN


def _cmd_list(args) -> int:
    found = congruent_numbers_below(args.limit, args.m_bound)
    _emit({"limit": str(args.limit), "m_bound": str(args.m_bound), "congruent": [str(a) for a in found]}, args.pretty)
    return EXIT_OK


def _cmd_map(args, parser) -> int:
    values = args.values
    want = 3 if args.point else 4
    if len(values) != want:
        parser.error(f"map expects {want} values, got {len(values)}")
    try:
        rats = [_rational(v) for v in values[:-1]]
        A = _positive_int(values[-1])
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    if args.point:
        _emit(triple_to_json(psi_inv(Point(*rats), A)), args.pretty)
    else:
        point, _ = psi(make_triple(*rats, A))
        _emit(point_to_json(point), args.pretty)
    return EXIT_OK


def _cmd_fermat(args) -> int:
    seed = make_triple(args.a, args.b, args.c, args.A)
    if args.steps > MAX_STEPS:
        raise StepCapExceeded(f"{args.steps} steps requested, cap is {MAX_STEPS}")
    o = orbit(seed, args.steps + 1)
    _emit(orbit_to_json(o), args.pretty)
    checks = verify_orbit(o)
    if not all(checks.values()):
        failed = ", ".join(k for k, ok in checks.items() if not ok)
        sys.stderr.write(f"orbit invariants failed: {failed}\n")
        return EXIT_DOMAIN
    return EXIT_OK


def _cmd_double(args) -> int:
    curve = CongruentCurve(args.A)
    p = Point(args.x, args.y)
    if not contains(curve, p):
        raise NotOnCurve(f"{p} is not on {curve}")
    if p.y == 0:
        report = {"A": str(args.A), "order": "2", "points": [point_to_json(p), point_to_json(double(curve, p))]}
        _emit(report, args.pretty)
        return EXIT_OK
    points = infinite_order_witness(p, args.A, args.times)
    _emit({"A": str(args.A), "order": "infinite", "points": [point_to_json(q) for q in points]}, args.pretty)
    return EXIT_OK


def _parse_points(tokens: List[str], parser) -> List[Point]:
    parts = [s for tok in tokens for s in tok.split(",") if s]
    if len(parts) % 2:
        parser.error("--points needs an even number of coordinates")
    try:
        coords = [_rational(s) for s in parts]
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    return [Point(coords[i], coords[i + 1]) for i in range(0, len(coords), 2)]


def _cmd_plot(args, parser) -> int:
    points = _parse_points(args.points, parser)
    svg = render_chord_figure(args.A, points)
    args.out.write_bytes(svg.encode("utf-8"))
    _emit({"out": str(args.out), "markers": str(svg.count('class="marker"'))}, args.pretty)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handlers = {
            "check": _cmd_check,
            "list": _cmd_list,
            "map": lambda a: _cmd_map(a, parser),
            "fermat": _cmd_fermat,
            "double": _cmd_double,
            "plot": lambda a: _cmd_plot(a, parser),
        }
        return handlers[args.command](args)
    except _UsageError:
        return EXIT_USAGE
    except StepCapExceeded as exc:
        _emit({"error": exc.code, "message": str(exc)}, False)
        return EXIT_CAP
    except CongruentError as exc:
        _emit({"error": exc.code, "message": str(exc)}, False)
        return EXIT_DOMAIN
    except OSError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, False)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
