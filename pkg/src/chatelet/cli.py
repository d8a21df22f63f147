"""Command-line front end emitting canonical JSON certificates.

Exit codes: 0 success, 1 internal contradiction (a result that would
falsify the verified statements), 2 undecided (search bounds exhausted),
64 usage error, 65 invalid mathematical input.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import certjson
from .bundle import (
    ProjectivePoint,
    ab_parameters,
    fiber_at,
    fiber_polynomial,
    scan_family,
    verify_fiber_irreducible,
)
from .curves import (
    ac_product_curve,
    affine_point_search,
    discriminant_curve,
    points_at_infinity,
    symmetry_case_analysis_ac_curve,
)
from .errors import ChateletError, InseparableInput
from .quartic import QuarticPoly
from .surface import (
    CANDIDATE_HASSE_VIOLATION,
    HAS_POINT,
    LOCALLY_OBSTRUCTED,
    UNDECIDED,
    ChateletSurface,
    hasse_violation_report,
)

EXIT_OK = 0
EXIT_CONTRADICTION = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 64
EXIT_BAD_INPUT = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("CHATELET_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> _Parser:
    parser = _Parser(
        prog="chatelet",
        description=(
            "Exact verification of local solvability, irreducibility and "
            "rational points for Chatelet surfaces and the fixed pencil."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    scan = sub.add_parser("verify-theorem", help="scan every fiber of the pencil")
    scan.add_argument("--height", type=int, default=5, help="max height of (u:v)")
    scan.add_argument("--search", type=int, default=50, help="point search height")
    scan.add_argument("--depth", type=int, default=8, help="local search depth")
    scan.add_argument("--workers", type=int, default=_default_workers())
    scan.add_argument("--json", action="store_true", help="canonical JSON output")

    fiber = sub.add_parser("fiber", help="certify a single fiber of the pencil")
    fiber.add_argument("--u", required=True, help="parameter u as p/q, or 'inf'")
    fiber.add_argument("--search", type=int, default=100)
    fiber.add_argument("--depth", type=int, default=8)
    fiber.add_argument("--json", action="store_true")

    curves = sub.add_parser("curves", help="search the two genus-1 quartic curves")
    curves.add_argument("--which", required=True, choices=["C", "Cprime"])
    curves.add_argument("--bound", type=int, default=1000, help="height bound for t")
    curves.add_argument("--json", action="store_true")

    surf = sub.add_parser("surface", help="report on an arbitrary surface")
    surf.add_argument("--alpha", required=True, help="alpha as p/q")
    surf.add_argument(
        "--p",
        required=True,
        dest="coeffs",
        help="five coefficients, x^4 down to the constant, space separated",
    )
    surf.add_argument("--search", type=int, default=100)
    surf.add_argument("--depth", type=int, default=8)
    surf.add_argument("--json", action="store_true")
    return parser


def _parse_rational_arg(text: str, parser: _Parser) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        parser.error(f"not a rational number: {text!r}")


def _emit(doc: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        sys.stdout.write(certjson.dumps(doc))
    else:
        for line in lines:
            print(line)


def _cmd_verify_theorem(ns) -> int:
    report = scan_family(ns.height, ns.search, ns.depth, workers=ns.workers)
    doc = certjson.document(
        "verify-theorem",
        {
            "height": ns.height,
            "search": ns.search,
            "depth": ns.depth,
        },
        certjson.scan_report_json(report),
    )
    lines = [
        f"fibers scanned (height <= {ns.height}): {len(report.fibers)}",
        f"affine fibers with exact rational points: "
        f"{sum(1 for e in report.fibers if e.v != 0 and e.point is not None)}"
        f"/{sum(1 for e in report.fibers if e.v != 0)}",
        f"fiber at (1:0): {report.infinity_classification}",
    ]
    for item in report.undecided:
        lines.append(f"undecided: {item}")
    for item in report.contradictions:
        lines.append(f"CONTRADICTION: {item}")
    lines.append("result: " + ("ok" if report.ok else "not ok"))
    _emit(doc, ns.json, lines)
    if report.contradictions:
        return EXIT_CONTRADICTION
    if not report.ok:
        return EXIT_UNDECIDED
    return EXIT_OK


def _projective_point_from_u(text: str, parser: _Parser) -> ProjectivePoint:
    text = text.strip()
    if text in ("inf", "infinity", "1/0"):
        return ProjectivePoint(1, 0)
    u = _parse_rational_arg(text, parser)
    return ProjectivePoint(u.numerator, u.denominator)


def _cmd_fiber(ns, parser: _Parser) -> int:
    pt = _projective_point_from_u(ns.u, parser)
    a, b = ab_parameters(pt)
    q = fiber_polynomial(pt)
    irreducible = None if pt.is_infinity else verify_fiber_irreducible(pt)
    surface = fiber_at(pt)
    report = hasse_violation_report(surface, ns.search, ns.depth)
    doc = certjson.document(
        "fiber",
        {"u": str(pt), "search": ns.search, "depth": ns.depth},
        {
            "parameters": {"a": str(a), "b": str(b)},
            "fiber_polynomial": {
                "x4": str(q.a),
                "x2": str(q.b),
                "const": str(q.c),
            },
            "irreducible": irreducible,
            "hasse_report": certjson.hasse_report_json(report),
        },
    )
    lines = [
        f"fiber over {pt}: a = {a}, b = {b}",
        f"quartic: {q.a}*x^4 + {q.b}*x^2 {'-' if q.c < 0 else '+'} {abs(q.c)}",
        f"irreducible: {irreducible if irreducible is not None else 'n/a (reducible by construction)'}",
        f"local solvability: {report.local_report.status}",
        f"classification: {report.classification}",
    ]
    if report.point is not None:
        p = report.point
        lines.append(f"rational point: x = {p.x}, y = {p.y}, z = {p.z}")
    _emit(doc, ns.json, lines)
    if pt.is_infinity:
        if report.classification == HAS_POINT:
            return EXIT_CONTRADICTION
        if report.classification == CANDIDATE_HASSE_VIOLATION:
            return EXIT_OK
        return EXIT_UNDECIDED
    if report.classification == HAS_POINT:
        return EXIT_OK
    if report.classification == LOCALLY_OBSTRUCTED:
        return EXIT_CONTRADICTION  # would falsify everywhere-local solvability
    return EXIT_UNDECIDED


def _cmd_curves(ns) -> int:
    curve = discriminant_curve() if ns.which == "C" else ac_product_curve()
    points = affine_point_search(curve, ns.bound)
    count_inf, root = points_at_infinity(curve)
    symmetry = symmetry_case_analysis_ac_curve() if ns.which == "Cprime" else None
    doc = certjson.document(
        "curves",
        {"which": ns.which, "bound": ns.bound},
        {
            "affine_points": [certjson.curve_point_json(p) for p in points],
            "points_at_infinity": count_inf,
            "infinity_square_root": None
            if root is None
            else certjson.rational_json(root),
            "symmetry_case_analysis": symmetry,
        },
    )
    lines = [
        f"curve {ns.which}: affine points of height <= {ns.bound}: {len(points)}",
        f"points at infinity: {count_inf}",
    ]
    if symmetry is not None:
        lines.append(f"t = 0 and w = 0 cases eliminated exactly: {symmetry}")
    _emit(doc, ns.json, lines)
    if points:
        return EXIT_CONTRADICTION  # a point would falsify the trusted inputs
    if symmetry is False:
        return EXIT_CONTRADICTION
    return EXIT_OK


def _cmd_surface(ns, parser: _Parser) -> int:
    alpha = _parse_rational_arg(ns.alpha, parser)
    parts = ns.coeffs.split()
    if len(parts) != 5:
        parser.error("--p needs exactly five coefficients (x^4 ... constant)")
    coeffs = [_parse_rational_arg(c, parser) for c in parts]
    try:
        surface = ChateletSurface(alpha, QuarticPoly.from_leading(*coeffs))
    except (InseparableInput, ValueError) as exc:
        print(f"invalid surface: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    report = hasse_violation_report(surface, ns.search, ns.depth)
    doc = certjson.document(
        "surface",
        {
            "alpha": str(alpha),
            "coefficients": [str(c) for c in coeffs],
            "search": ns.search,
            "depth": ns.depth,
        },
        {
            "surface": certjson.surface_json(surface),
            "hasse_report": certjson.hasse_report_json(report),
        },
    )
    lines = [
        f"surface: alpha = {alpha}, P from x^4 down: {' '.join(str(c) for c in coeffs)}",
        f"local solvability: {report.local_report.status}",
        f"classification: {report.classification}",
    ]
    if report.point is not None:
        p = report.point
        lines.append(f"rational point: x = {p.x}, y = {p.y}, z = {p.z}")
    if report.obstructed_place is not None:
        lines.append(f"obstructed at: {report.obstructed_place}")
    _emit(doc, ns.json, lines)
    return EXIT_UNDECIDED if report.classification == UNDECIDED else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        if ns.command == "verify-theorem":
            return _cmd_verify_theorem(ns)
        if ns.command == "fiber":
            return _cmd_fiber(ns, parser)
        if ns.command == "curves":
            return _cmd_curves(ns)
        if ns.command == "surface":
            return _cmd_surface(ns, parser)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    except InseparableInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ChateletError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    parser.error(f"unknown command {ns.command!r}")
    return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
