"""Canonical JSON encoding of certificates, verdicts and reports.

Integers are decimal strings, rationals are {"num", "den"} pairs, and the
point at infinity is the string "inf", so documents are exact and
reparseable.  Key order is fixed by construction and nothing run-dependent
(timestamps, hostnames) enters the certificate body, so identical inputs
serialize to identical bytes.  ``parse_document`` inverts ``document`` up to
object equality, which the tests rely on.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .bundle import FiberEntry, ScanReport
from .curves import CurvePoint, LocalEvidenceEntry
from .localfields import (
    REAL_PLACE,
    FinitePlace,
    PAdicApproximation,
    Place,
)
from .surface import (
    AT_INFINITY,
    ChateletSurface,
    Evidence,
    GlobalPoint,
    GoodPrimesBlanketEvidence,
    HasseReport,
    HenselLiftEvidence,
    HilbertSymbolEvidence,
    LocalCertificate,
    LocalSolvabilityReport,
    RealSignEvidence,
    SmoothFpPointEvidence,
    SolvabilityVerdict,
    WitnessX,
)

SCHEMA = "chatelet-certificate/1"


def rational_json(r: Fraction) -> dict:
    return {"num": str(r.numerator), "den": str(r.denominator)}


def parse_rational(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def witness_json(x: Optional[WitnessX]):
    if x is None:
        return None
    if x is AT_INFINITY:
        return "inf"
    return rational_json(x)


def parse_witness(obj) -> Optional[WitnessX]:
    if obj is None:
        return None
    if obj == "inf":
        return AT_INFINITY
    return parse_rational(obj)


def place_json(place: Optional[Place]):
    return None if place is None else str(place)


def parse_place(obj) -> Optional[Place]:
    if obj is None:
        return None
    return REAL_PLACE if obj == "real" else FinitePlace(int(obj))


def approximation_json(a: PAdicApproximation) -> dict:
    return {
        "prime": str(a.prime),
        "center": str(a.center),
        "precision": a.precision_exponent,
    }


def parse_approximation(obj: dict) -> PAdicApproximation:
    return PAdicApproximation(int(obj["prime"]), int(obj["center"]), obj["precision"])


def evidence_json(ev: Evidence) -> dict:
    if isinstance(ev, RealSignEvidence):
        return {"kind": ev.kind, "detail": ev.detail}
    if isinstance(ev, HilbertSymbolEvidence):
        return {"kind": ev.kind}
    if isinstance(ev, HenselLiftEvidence):
        return {
            "kind": ev.kind,
            "even_valuation": ev.even_valuation,
            "approximation": approximation_json(ev.approximation),
        }
    if isinstance(ev, SmoothFpPointEvidence):
        return {
            "kind": ev.kind,
            "point_mod_p": [str(ev.x_residue), str(ev.y_residue), str(ev.z_residue)],
            "lifted_coordinate": ev.lifted_coordinate,
            "square_value": rational_json(ev.square_value),
            "approximation": approximation_json(ev.approximation),
        }
    if isinstance(ev, GoodPrimesBlanketEvidence):
        return {"kind": ev.kind, "bad_primes": [str(p) for p in ev.bad_primes]}
    raise TypeError(f"unknown evidence type {type(ev)!r}")


def parse_evidence(obj: dict) -> Evidence:
    kind = obj["kind"]
    if kind == "real_sign":
        return RealSignEvidence(obj["detail"])
    if kind == "hilbert_symbol_plus_one":
        return HilbertSymbolEvidence()
    if kind == "hensel_lift":
        return HenselLiftEvidence(
            obj["even_valuation"], parse_approximation(obj["approximation"])
        )
    if kind == "smooth_fp_point_lifted":
        x, y, z = (int(s) for s in obj["point_mod_p"])
        return SmoothFpPointEvidence(
            x, y, z,
            obj["lifted_coordinate"],
            parse_rational(obj["square_value"]),
            parse_approximation(obj["approximation"]),
        )
    if kind == "good_primes_blanket":
        return GoodPrimesBlanketEvidence(tuple(int(p) for p in obj["bad_primes"]))
    raise ValueError(f"unknown evidence kind {kind!r}")


def certificate_json(cert: Optional[LocalCertificate]) -> Optional[dict]:
    if cert is None:
        return None
    return {
        "place": place_json(cert.place),
        "witness_x": witness_json(cert.witness_x),
        "conic_value": None if cert.conic_value is None else rational_json(cert.conic_value),
        "evidence": evidence_json(cert.evidence),
    }


def parse_certificate(obj: Optional[dict]) -> Optional[LocalCertificate]:
    if obj is None:
        return None
    value = obj["conic_value"]
    return LocalCertificate(
        parse_place(obj["place"]),
        parse_witness(obj["witness_x"]),
        None if value is None else parse_rational(value),
        parse_evidence(obj["evidence"]),
    )


def verdict_json(v: SolvabilityVerdict) -> dict:
    return {
        "status": v.status,
        "certificate": certificate_json(v.certificate),
        "reason": v.reason,
    }


def parse_verdict(obj: dict) -> SolvabilityVerdict:
    return SolvabilityVerdict(
        obj["status"], parse_certificate(obj["certificate"]), obj["reason"]
    )


def point_json(pt: Optional[GlobalPoint]) -> Optional[dict]:
    if pt is None:
        return None
    return {
        "x": witness_json(pt.x),
        "y": rational_json(pt.y),
        "z": rational_json(pt.z),
        "on_degenerate_conic": pt.on_degenerate_conic,
    }


def parse_point(obj: Optional[dict]) -> Optional[GlobalPoint]:
    if obj is None:
        return None
    return GlobalPoint(
        parse_witness(obj["x"]),
        parse_rational(obj["y"]),
        parse_rational(obj["z"]),
        obj["on_degenerate_conic"],
    )


def local_report_json(rep: LocalSolvabilityReport) -> dict:
    return {
        "entries": [
            {"place": key, "verdict": verdict_json(v)} for key, v in rep.entries
        ],
        "good_primes_blanket": verdict_json(rep.blanket),
        "status": rep.status,
    }


def parse_local_report(obj: dict) -> LocalSolvabilityReport:
    entries = tuple(
        (e["place"], parse_verdict(e["verdict"])) for e in obj["entries"]
    )
    return LocalSolvabilityReport(
        entries, parse_verdict(obj["good_primes_blanket"]), obj["status"]
    )


def hasse_report_json(rep: HasseReport) -> dict:
    return {
        "classification": rep.classification,
        "local_solvability": local_report_json(rep.local_report),
        "point": point_json(rep.point),
        "search_height_bound": rep.search_height_bound,
        "obstructed_place": rep.obstructed_place,
    }


def parse_hasse_report(obj: dict) -> HasseReport:
    return HasseReport(
        obj["classification"],
        parse_local_report(obj["local_solvability"]),
        parse_point(obj["point"]),
        obj["search_height_bound"],
        obj["obstructed_place"],
    )


def surface_json(s: ChateletSurface) -> dict:
    return {
        "alpha": rational_json(s.alpha),
        "alpha_squarefree": str(s.alpha_squarefree),
        "coefficients_low_to_high": [rational_json(c) for c in s.poly.coefficients],
    }


def fiber_entry_json(e: FiberEntry) -> dict:
    return {
        "point": {"u": str(e.u), "v": str(e.v)},
        "parameters": {"a": str(e.a), "b": str(e.b)},
        "fiber_polynomial": {
            "x4": str(e.poly[0]),
            "x2": str(e.poly[1]),
            "const": str(e.poly[2]),
        },
        "irreducible": e.irreducible,
        "oracle_agrees": e.oracle_agrees,
        "valuation_2_of_b_over_a": e.v2,
        "valuation_3_of_b_over_a": e.v3,
        "real_identity_ok": e.real_identity_ok,
        "rational_point": point_json(e.point),
        "pencil_equation_ok": e.theorem_form_ok,
        "hasse_report": None if e.hasse is None else hasse_report_json(e.hasse),
    }


def parse_fiber_entry(obj: dict) -> FiberEntry:
    return FiberEntry(
        u=int(obj["point"]["u"]),
        v=int(obj["point"]["v"]),
        a=int(obj["parameters"]["a"]),
        b=int(obj["parameters"]["b"]),
        poly=(
            int(obj["fiber_polynomial"]["x4"]),
            int(obj["fiber_polynomial"]["x2"]),
            int(obj["fiber_polynomial"]["const"]),
        ),
        irreducible=obj["irreducible"],
        oracle_agrees=obj["oracle_agrees"],
        v2=obj["valuation_2_of_b_over_a"],
        v3=obj["valuation_3_of_b_over_a"],
        real_identity_ok=obj["real_identity_ok"],
        point=parse_point(obj["rational_point"]),
        theorem_form_ok=obj["pencil_equation_ok"],
        hasse=None
        if obj["hasse_report"] is None
        else parse_hasse_report(obj["hasse_report"]),
    )


def scan_report_json(rep: ScanReport) -> dict:
    return {
        "height_bound": rep.height_bound,
        "point_search_bound": rep.point_search_bound,
        "depth": rep.depth,
        "fibers": [fiber_entry_json(e) for e in rep.fibers],
        "all_affine_fibers_have_points": rep.all_affine_fibers_have_points,
        "infinity_classification": rep.infinity_classification,
        "undecided": list(rep.undecided),
        "contradictions": list(rep.contradictions),
    }


def parse_scan_report(obj: dict) -> ScanReport:
    return ScanReport(
        height_bound=obj["height_bound"],
        point_search_bound=obj["point_search_bound"],
        depth=obj["depth"],
        fibers=tuple(parse_fiber_entry(e) for e in obj["fibers"]),
        all_affine_fibers_have_points=obj["all_affine_fibers_have_points"],
        infinity_classification=obj["infinity_classification"],
        undecided=tuple(obj["undecided"]),
        contradictions=tuple(obj["contradictions"]),
    )


def curve_point_json(pt: CurvePoint) -> dict:
    return {"t": rational_json(pt.t), "w": rational_json(pt.w)}


def parse_curve_point(obj: dict) -> CurvePoint:
    return CurvePoint(parse_rational(obj["t"]), parse_rational(obj["w"]))


def curve_evidence_json(e: LocalEvidenceEntry) -> dict:
    return {
        "place": e.place,
        "solvable": e.solvable,
        "witness_t": None if e.witness_t is None else rational_json(e.witness_t),
    }


def document(command: str, parameters: dict, report: dict) -> dict:
    """Wrap a report payload with the schema header and the run parameters.

    The header carries only the inputs that determine the run, so a repeat
    invocation produces byte-identical output.
    """
    return {
        "schema": SCHEMA,
        "command": command,
        "parameters": parameters,
        "report": report,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)
