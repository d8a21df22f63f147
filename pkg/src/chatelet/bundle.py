"""The fixed pencil of Chatelet surfaces and its per-fiber verifiers.

The pencil is y^2 + z^2 = a^2 P0(x) + b^2 PINF(x) over the projective
(u : v)-line, with P0 = (x^2-2)(3-x^2), PINF = 2x^4 + 3x^2 - 1 and the
substitution a = 6u^2 - v^2, b = 12v^2.  Every fiber polynomial expands to

    x^4 (2b^2 - a^2) + x^2 (3b^2 + 5a^2) - (6a^2 + b^2),

an identity checked symbolically in the tests.  The scan verifies, fiber by
fiber: irreducibility of the quartic, the 2- and 3-adic valuation lemmas
behind local solvability, the real-point identity, and an explicit rational
point; the fiber over (1 : 0) is instead expected to be a candidate Hasse
violation (its quartic is 36 * P0, the classical counterexample surface up
to a square).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import DegenerateFiber
from .quartic import (
    BiquadraticQuartic,
    QuarticPoly,
    biquadratic_irreducible,
    factorization_oracle,
    is_separable,
)
from .rational import as_rational, is_rational_square, padic_valuation
from .surface import (
    CANDIDATE_HASSE_VIOLATION,
    ChateletSurface,
    GlobalPoint,
    HasseReport,
    find_rational_point,
    hasse_violation_report,
)

#: (x^2 - 2)(3 - x^2) = -x^4 + 5x^2 - 6
P0 = QuarticPoly((-6, 0, 5, 0, -1))

#: 2x^4 + 3x^2 - 1
PINF = QuarticPoly((-1, 0, 3, 0, 2))


@dataclass(frozen=True)
class ChateletBundle:
    """alpha together with two linearly independent quartics P and Q."""

    alpha: Fraction
    P: QuarticPoly
    Q: QuarticPoly

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")
        cp = self.P.coefficients
        cq = self.Q.coefficients
        # linear independence of the coefficient vectors
        if all(cp[i] * cq[j] == cp[j] * cq[i] for i in range(5) for j in range(5)):
            raise ValueError("P and Q must be linearly independent")

    def fiber_polynomial(self, a: int, b: int) -> QuarticPoly:
        return self.P.scaled(a * a).plus(self.Q.scaled(b * b))


#: The pencil whose fibers this module certifies.
PENCIL = ChateletBundle(Fraction(-1), P0, PINF)


@dataclass(frozen=True)
class ProjectivePoint:
    """(u : v) with gcd(|u|, |v|) = 1 and v > 0, or (1 : 0)."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == 0 and self.v == 0:
            raise ValueError("(0 : 0) is not a projective point")
        g = gcd(abs(self.u), abs(self.v))
        u, v = self.u // g, self.v // g
        if v < 0:
            u, v = -u, -v
        elif v == 0:
            u = 1
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def height(self) -> int:
        return max(abs(self.u), self.v)

    @property
    def is_infinity(self) -> bool:
        return self.v == 0

    def __str__(self) -> str:
        return f"({self.u}:{self.v})"


def projective_points_by_height(hmax: int) -> list[ProjectivePoint]:
    """All canonical (u : v) with height <= hmax, ordered by (height, u, v)."""
    pts = [
        ProjectivePoint(u, v)
        for v in range(1, hmax + 1)
        for u in range(-hmax, hmax + 1)
        if gcd(abs(u), v) == 1
    ]
    pts.append(ProjectivePoint(1, 0))
    pts.sort(key=lambda p: (p.height, p.u, p.v))
    return pts


def ab_parameters(pt: ProjectivePoint) -> tuple[int, int]:
    """a = 6u^2 - v^2 and b = 12v^2; never both zero since 6 is a nonsquare."""
    a = 6 * pt.u * pt.u - pt.v * pt.v
    b = 12 * pt.v * pt.v
    assert (a, b) != (0, 0)
    return a, b


def fiber_polynomial(pt: ProjectivePoint) -> BiquadraticQuartic:
    a, b = ab_parameters(pt)
    return BiquadraticQuartic(
        Fraction(2 * b * b - a * a),
        Fraction(3 * b * b + 5 * a * a),
        Fraction(-(6 * a * a + b * b)),
    )


def fiber_at(pt: ProjectivePoint) -> ChateletSurface:
    """The Chatelet surface over (u : v); degenerate fibers cannot occur at
    rational parameters, and this is re-checked rather than assumed."""
    quartic = fiber_polynomial(pt).to_quartic()
    if quartic.degree != 4 or not is_separable(quartic):
        raise DegenerateFiber(f"fiber over {pt} is not a separable quartic")
    expected = PENCIL.fiber_polynomial(*ab_parameters(pt))
    assert quartic == expected, "expanded fiber disagrees with the pencil"
    return ChateletSurface(Fraction(-1), quartic)


def p_t_polynomial(t) -> BiquadraticQuartic:
    """PINF + t^2 P0 as a biquadratic: (2 - t^2, 3 + 5t^2, -6t^2 - 1)."""
    t = as_rational(t)
    return BiquadraticQuartic(2 - t * t, 3 + 5 * t * t, -6 * t * t - 1)


def discriminant_curve_value(t) -> Fraction:
    """b^2 - 4ac of the one-parameter quartic; equals t^4 + 74t^2 + 17.

    Its nonsquareness at each rational t is the first irreducibility
    condition; rational points (t, w) with w^2 equal to this value live on
    the first of the two genus-1 curves handled in :mod:`chatelet.curves`.
    """
    t = as_rational(t)
    q = p_t_polynomial(t)
    value = q.quadratic_discriminant()
    assert value == t**4 + 74 * t**2 + 17
    return value


def ac_curve_value(t) -> Fraction:
    """a*c of the one-parameter quartic: (-6t^2 - 1)(2 - t^2).

    Nonsquareness for every rational t is the second irreducibility
    condition, tied to the second genus-1 curve.
    """
    t = as_rational(t)
    return (-6 * t * t - 1) * (2 - t * t)


def real_point_identity_check(a: int, b: int) -> bool:
    """4(2b^2-a^2)(-6a^2-b^2) - (3b^2+5a^2)^2 == -17b^4 - 74a^2b^2 - a^4.

    The right side is negative for (a, b) != (0, 0); combined with a
    negative x^4 coefficient it makes the fiber quartic positive at the
    vertex of its quadratic-in-x^2, which is how real points are found.
    """
    lhs = 4 * (2 * b * b - a * a) * (-6 * a * a - b * b) - (3 * b * b + 5 * a * a) ** 2
    rhs = -17 * b**4 - 74 * a * a * b * b - a**4
    return lhs == rhs


def valuation_lemma_v3(pt: ProjectivePoint) -> int:
    """v_3(b/a) for an affine fiber; always >= 1.

    If 3 does not divide v then 3 divides b = 12v^2 exactly once and not a;
    if 3 divides v then v_3(a) = 1 while v_3(b) >= 3.
    """
    if pt.is_infinity:
        raise ValueError("the fiber at (1:0) has b = 0")
    a, b = ab_parameters(pt)
    v = padic_valuation(Fraction(b, a), 3)
    assert v >= 1, f"v_3(b/a) = {v} < 1 at {pt}"
    return v


def valuation_lemma_v2(pt: ProjectivePoint) -> int:
    """v_2(b/a) for an affine fiber; always >= 2, by the parity of v."""
    if pt.is_infinity:
        raise ValueError("the fiber at (1:0) has b = 0")
    a, b = ab_parameters(pt)
    v = padic_valuation(Fraction(b, a), 2)
    assert v >= 2, f"v_2(b/a) = {v} < 2 at {pt}"
    return v


def verify_fiber_irreducible(pt: ProjectivePoint) -> bool:
    """Irreducibility of the fiber quartic; affine fibers only.

    The fiber over (1:0) is excluded by precondition: its quartic is
    36 * P0, reducible by construction.
    """
    if pt.is_infinity:
        raise ValueError("irreducibility scan covers affine fibers only")
    return biquadratic_irreducible(fiber_polynomial(pt))


def degenerate_locus_check(height_bound: int) -> bool:
    """No degenerate fiber over any rational point up to the height bound.

    Also verifies the two symbolic exclusions: the x^4 coefficient vanishes
    only at t^2 = 2 with t = a/b (2 is not a rational square), and the
    quadratic discriminant a^4 + 74a^2b^2 + 17b^4 is positive definite.
    """
    if is_rational_square(2) is not None:
        return False
    for pt in projective_points_by_height(height_bound):
        try:
            fiber_at(pt)
        except DegenerateFiber:
            return False
        a, b = ab_parameters(pt)
        if a**4 + 74 * a * a * b * b + 17 * b**4 <= 0:
            return False
    return True


def theorem_form_verifies(pt: ProjectivePoint, point: GlobalPoint) -> bool:
    """Re-check a fiber point on y^2 + z^2 = a^2 P0(x) + b^2 PINF(x) itself,
    with a and b substituted, not on the pre-expanded quartic."""
    a, b = ab_parameters(pt)
    lhs = point.y**2 + point.z**2
    if isinstance(point.x, Fraction):
        rhs = a * a * P0(point.x) + b * b * PINF(point.x)
    else:  # at infinity: homogenized leading coefficients
        rhs = a * a * P0.value_at_infinity() + b * b * PINF.value_at_infinity()
    return lhs == rhs


# --------------------------------------------------------------------------
# the scan


@dataclass(frozen=True)
class FiberEntry:
    u: int
    v: int
    a: int
    b: int
    poly: tuple[int, int, int]  # x^4, x^2, constant coefficients
    irreducible: Optional[bool]
    oracle_agrees: Optional[bool]
    v2: Optional[int]
    v3: Optional[int]
    real_identity_ok: bool
    point: Optional[GlobalPoint]
    theorem_form_ok: Optional[bool]
    hasse: Optional[HasseReport]  # only for the fiber at infinity


@dataclass(frozen=True)
class ScanReport:
    height_bound: int
    point_search_bound: int
    depth: int
    fibers: tuple[FiberEntry, ...]
    all_affine_fibers_have_points: bool
    infinity_classification: Optional[str]
    undecided: tuple[str, ...]
    contradictions: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            not self.contradictions
            and not self.undecided
            and self.all_affine_fibers_have_points
            and self.infinity_classification == CANDIDATE_HASSE_VIOLATION
        )


def _scan_one_fiber(args: tuple[int, int, int, int]) -> FiberEntry:
    u, v, search_bound, depth = args
    pt = ProjectivePoint(u, v)
    a, b = ab_parameters(pt)
    q = fiber_polynomial(pt)
    poly = (int(q.a), int(q.b), int(q.c))
    identity_ok = real_point_identity_check(a, b)
    if pt.is_infinity:
        surface = fiber_at(pt)
        report = hasse_violation_report(surface, search_bound, depth)
        return FiberEntry(
            u=pt.u, v=pt.v, a=a, b=b, poly=poly,
            irreducible=None, oracle_agrees=None, v2=None, v3=None,
            real_identity_ok=identity_ok, point=report.point,
            theorem_form_ok=None, hasse=report,
        )
    irreducible = verify_fiber_irreducible(pt)
    oracle_agrees = (
        len(factorization_oracle(q.to_quartic()).factors) == 1
    ) == irreducible
    v2 = valuation_lemma_v2(pt)
    v3 = valuation_lemma_v3(pt)
    surface = fiber_at(pt)
    point = find_rational_point(surface, search_bound)
    theorem_ok = theorem_form_verifies(pt, point) if point is not None else None
    return FiberEntry(
        u=pt.u, v=pt.v, a=a, b=b, poly=poly,
        irreducible=irreducible, oracle_agrees=oracle_agrees, v2=v2, v3=v3,
        real_identity_ok=identity_ok, point=point,
        theorem_form_ok=theorem_ok, hasse=None,
    )


def scan_family(
    height_bound: int,
    point_search_bound: int = 50,
    depth: int = 8,
    workers: int = 1,
) -> ScanReport:
    """Run every per-fiber verifier over all (u : v) of height <= bound.

    Fibers are independent, so they may be scanned by parallel workers; the
    report is a deterministic fold in canonical fiber order either way.
    """
    pts = projective_points_by_height(height_bound)
    jobs = [(p.u, p.v, point_search_bound, depth) for p in pts]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_scan_one_fiber, jobs))
    else:
        entries = [_scan_one_fiber(j) for j in jobs]

    undecided: list[str] = []
    contradictions: list[str] = []
    infinity_classification = None
    all_points = True
    for e in entries:
        label = f"({e.u}:{e.v})"
        if e.v == 0:
            infinity_classification = e.hasse.classification
            if e.hasse.classification == "has_point":
                contradictions.append(
                    f"{label}: rational point found on the reducible fiber"
                )
            elif e.hasse.classification == "undecided":
                undecided.append(f"{label}: local solvability not settled")
            continue
        if not e.irreducible:
            contradictions.append(f"{label}: fiber quartic not irreducible")
        if e.oracle_agrees is False:
            contradictions.append(f"{label}: criterion and oracle disagree")
        if not e.real_identity_ok:
            contradictions.append(f"{label}: real-point identity failed")
        if e.point is None:
            all_points = False
            undecided.append(f"{label}: no point within height {point_search_bound}")
        elif not e.theorem_form_ok:
            contradictions.append(f"{label}: point fails the pencil equation")
    return ScanReport(
        height_bound=height_bound,
        point_search_bound=point_search_bound,
        depth=depth,
        fibers=tuple(entries),
        all_affine_fibers_have_points=all_points,
        infinity_classification=infinity_classification,
        undecided=tuple(undecided),
        contradictions=tuple(contradictions),
    )
