"""Bounded point search on the two genus-1 quartics behind irreducibility.

Fiber quartics of the pencil are irreducible exactly when two values are
rational nonsquares for every parameter t; collecting (t, w) with w^2 equal
to either value defines two curves of genus 1:

    w^2 = t^4 + 74 t^2 + 17          (quadratic discriminant of the fiber)
    w^2 = (-6t^2 - 1)(2 - t^2)       (product of outer coefficients)

Their pointlessness over Q rests on group computations recorded as trusted
inputs (both Jacobians have Mordell-Weil group Z/2Z); this module supplies
the checkable halves: exhaustive affine searches to a height bound, the
exact count of points at infinity, and the symmetry case analysis that
eliminates t = 0 and w = 0 on the second curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import fastsearch
from .errors import InseparableInput
from .localfields import is_square_in_Qp
from .quartic import QuarticPoly, is_separable, real_root_count
from .rational import as_rational, is_prime, is_rational_square

#: Trusted external input: both Jacobians below have rational points Z/2Z.
JACOBIAN_GROUPS = {
    "discriminant_curve": "Z/2Z",
    "ac_product_curve": "Z/2Z",
}


@dataclass(frozen=True)
class QuarticCurve:
    """w^2 = f(t) with f separable of degree 4 (weighted projective model)."""

    f: QuarticPoly

    def __post_init__(self):
        if self.f.degree != 4:
            raise ValueError("curve model needs a degree-4 right-hand side")
        if not is_separable(self.f):
            raise InseparableInput("curve model needs a separable quartic")


def discriminant_curve() -> QuarticCurve:
    return QuarticCurve(QuarticPoly((17, 0, 74, 0, 1)))


def ac_product_curve() -> QuarticCurve:
    # (-6t^2 - 1)(2 - t^2) = 6t^4 - 11t^2 - 2
    return QuarticCurve(QuarticPoly((-2, 0, -11, 0, 6)))


@dataclass(frozen=True)
class CurvePoint:
    t: Fraction
    w: Fraction


def affine_point_search(curve: QuarticCurve, height_bound: int) -> tuple[CurvePoint, ...]:
    """All affine rational points with height(t) <= bound, both signs of w.

    Complete within the bound: t runs over every p/q in lowest terms and
    f(t) is square-tested exactly.  Points are listed in canonical order
    (height of t, |numerator|, positive t first, denominator, then w >= 0
    before w < 0).
    """
    cs = curve.f.coefficients
    points: list[CurvePoint] = []

    def record(t: Fraction):
        w2 = curve.f(t)
        if w2 < 0:
            return
        w = is_rational_square(w2)
        if w is None:
            return
        points.append(CurvePoint(t, w))
        if w != 0:
            points.append(CurvePoint(t, -w))

    if all(c.denominator == 1 for c in cs):
        hits = fastsearch.curve_square_points(tuple(int(c) for c in cs), height_bound)
        seen = set()
        for p, q in hits:
            t = Fraction(p, q)
            if t not in seen:
                seen.add(t)
                record(t)
    else:
        for q in range(1, height_bound + 1):
            for p in range(-height_bound, height_bound + 1):
                t = Fraction(p, q)
                if t.denominator != q:
                    continue
                record(t)

    def key(pt: CurvePoint):
        t = pt.t
        h = max(abs(t.numerator), t.denominator)
        return (h, abs(t.numerator), 0 if t >= 0 else 1, t.denominator, 0 if pt.w >= 0 else 1)

    points.sort(key=key)
    return tuple(points)


def points_at_infinity(curve: QuarticCurve) -> tuple[int, Optional[Fraction]]:
    """Points at infinity of the smooth weighted model: 2 iff the leading
    coefficient is a nonzero rational square (w = +-sqrt there), else 0."""
    lc = curve.f.value_at_infinity()
    root = is_rational_square(lc)
    if root is not None and root != 0:
        return 2, root
    return 0, None


def symmetry_case_analysis_ac_curve() -> bool:
    """Exact elimination of t = 0 and w = 0 on w^2 = (-6t^2-1)(2-t^2).

    Points come in (+-t, +-w) quadruples, so if the curve had exactly two
    rational points one would have t = 0 or w = 0.  t = 0 forces w^2 = -2,
    not a square; w = 0 forces t^2 in {2, -1/6}, the roots of the quadratic
    in t^2, neither of which is a square.  Together with the trusted
    Mordell-Weil input this pins the rational point count to zero.
    """
    curve = ac_product_curve()
    if is_rational_square(curve.f(0)) is not None:
        return False
    # roots of 6 s^2 - 11 s - 2 in s = t^2
    a, b, c = Fraction(6), Fraction(-11), Fraction(-2)
    disc = b * b - 4 * a * c
    root = is_rational_square(disc)
    assert root is not None, "the quadratic in t^2 splits rationally here"
    for s in ((-b + root) / (2 * a), (-b - root) / (2 * a)):
        if is_rational_square(s) is not None:
            return False
    return True


@dataclass(frozen=True)
class LocalEvidenceEntry:
    place: str
    solvable: Optional[bool]  # None = no witness found within the bounded search
    witness_t: Optional[Fraction] = None


def local_points_evidence(
    curve: QuarticCurve, prime_bound: int
) -> tuple[LocalEvidenceEntry, ...]:
    """Bounded local-solvability evidence at the real place and p <= bound.

    Informational: a find is a certificate (f(t) is a local square at the
    witness), while absence of a find is reported as None, except over the
    reals where sign analysis is exact.
    """
    entries: list[LocalEvidenceEntry] = []
    lc = curve.f.value_at_infinity()
    if lc > 0:
        entries.append(LocalEvidenceEntry("real", True, None))
    else:
        witness = None
        for q in range(1, 30):
            for p in range(-30 * q, 30 * q + 1):
                t = Fraction(p, q)
                if curve.f(t) >= 0:
                    witness = t
                    break
            if witness is not None:
                break
        if witness is not None:
            entries.append(LocalEvidenceEntry("real", True, witness))
        elif real_root_count(curve.f) == 0 and curve.f(0) < 0:
            entries.append(LocalEvidenceEntry("real", False, None))
        else:
            entries.append(LocalEvidenceEntry("real", None, None))

    for p in range(2, prime_bound + 1):
        if not is_prime(p):
            continue
        found = None
        for t in _local_candidates(p):
            value = curve.f(t)
            if value == 0 or is_square_in_Qp(value, p):
                found = t
                break
        if found is None and is_square_in_Qp(lc, p):
            entries.append(LocalEvidenceEntry(str(p), True, None))
        elif found is not None:
            entries.append(LocalEvidenceEntry(str(p), True, found))
        else:
            entries.append(LocalEvidenceEntry(str(p), None, None))
    return tuple(entries)


def _local_candidates(p: int):
    cap = min(p * p * p, 500)
    for m in range(cap):
        yield Fraction(m)
    for e in (1, 2):
        for m in range(1, min(cap, 50)):
            if m % p:
                yield Fraction(m * p**e)
                yield Fraction(m, p**e)
