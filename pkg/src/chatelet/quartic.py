"""Polynomials of degree at most 4 over Q, with exact factorization.

Coefficients are stored low-to-high as Fractions.  The factorization oracle
is complete for degree <= 4: rational roots come from divisor enumeration
and quadratic splittings from exact integer searches, so its verdicts can
back up the faster nonsquare-based irreducibility criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import InseparableInput
from .rational import as_rational, factor, is_rational_square

Coeffs = tuple[Fraction, ...]


def _trim(cs) -> Coeffs:
    cs = tuple(cs)
    i = len(cs)
    while i > 0 and cs[i - 1] == 0:
        i -= 1
    return cs[:i]


def _degree(cs: Coeffs) -> int:
    cs = _trim(cs)
    return len(cs) - 1 if cs else -1


def _eval(cs: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _derivative(cs: Coeffs) -> Coeffs:
    return tuple(Fraction(i) * c for i, c in enumerate(cs))[1:]


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(out)


def _divmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    qlen = max(len(a) - len(b) + 1, 0)
    q = [Fraction(0)] * qlen
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db:
        if r[-1] == 0:
            r.pop()
            continue
        c = r[-1] / lb
        k = len(r) - 1 - db
        q[k] = c
        for i, cb in enumerate(b):
            r[k + i] -= c * cb
        r.pop()
    return _trim(q), _trim(r)


def _poly_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    if a:
        lc = a[-1]
        a = tuple(c / lc for c in a)
    return a


def _sylvester_resultant(a: Coeffs, b: Coeffs) -> Fraction:
    """Resultant via the Sylvester determinant, exact Gaussian elimination."""
    a, b = _trim(a), _trim(b)
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        return Fraction(0)
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    ra = list(reversed(a))
    rb = list(reversed(b))
    for i in range(n):
        rows.append([Fraction(0)] * i + ra + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + rb + [Fraction(0)] * (size - n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                f = rows[r][col] * inv
                for c in range(col, size):
                    rows[r][c] -= f * rows[col][c]
    return det


@dataclass(frozen=True)
class QuarticPoly:
    """A polynomial of degree <= 4 with rational coefficients (c0..c4)."""

    coefficients: Coeffs

    def __post_init__(self):
        cs = tuple(as_rational(c) for c in self.coefficients)
        if len(cs) > 5:
            if any(c != 0 for c in cs[5:]):
                raise ValueError("degree must be at most 4")
            cs = cs[:5]
        cs = cs + (Fraction(0),) * (5 - len(cs))
        object.__setattr__(self, "coefficients", cs)

    @classmethod
    def from_leading(cls, *coeffs) -> "QuarticPoly":
        """Build from coefficients listed x^4 down to the constant term."""
        return cls(tuple(reversed([as_rational(c) for c in coeffs])))

    @property
    def degree(self) -> int:
        return _degree(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __call__(self, x) -> Fraction:
        return _eval(self.coefficients, as_rational(x))

    def derivative(self) -> "QuarticPoly":
        return QuarticPoly(_derivative(self.coefficients))

    def scaled(self, c) -> "QuarticPoly":
        c = as_rational(c)
        return QuarticPoly(tuple(c * x for x in self.coefficients))

    def plus(self, other: "QuarticPoly") -> "QuarticPoly":
        return QuarticPoly(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def value_at_infinity(self) -> Fraction:
        """Value of the degree-4 homogenization at (x : w) = (1 : 0)."""
        return self.coefficients[4]

    def primitive_integer_form(self) -> tuple[Fraction, tuple[int, ...]]:
        """Write P = content * G with G primitive over Z and lc(G) > 0."""
        cs = _trim(self.coefficients)
        if not cs:
            raise ValueError("zero polynomial has no primitive form")
        den = 1
        for c in cs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in cs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        content = Fraction(g, den)
        if ints[-1] < 0:
            ints = [-v for v in ints]
            content = -content
        return content, tuple(ints)

    def discriminant(self) -> Fraction:
        n = self.degree
        if n < 2:
            raise ValueError("discriminant needs degree >= 2")
        cs = _trim(self.coefficients)
        res = _sylvester_resultant(cs, _derivative(cs))
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * res / cs[-1]


def evaluate(poly: QuarticPoly, x) -> Fraction:
    return poly(x)


def homogenize_value_at_infinity(poly: QuarticPoly) -> Fraction:
    return poly.value_at_infinity()


def is_separable(poly: QuarticPoly) -> bool:
    """True iff gcd(P, P') is constant (exact polynomial gcd over Q)."""
    if poly.is_zero:
        raise ValueError("separability of the zero polynomial is undefined")
    cs = _trim(poly.coefficients)
    if len(cs) <= 1:
        return True
    return _degree(_poly_gcd(cs, _derivative(cs))) == 0


def real_root_count(poly: QuarticPoly) -> int:
    """Number of distinct real roots, by a Sturm chain with exact arithmetic."""
    p0 = _trim(poly.coefficients)
    if _degree(p0) <= 0:
        return 0
    chain = [p0, _derivative(p0)]
    while _degree(chain[-1]) > 0:
        _, r = _divmod(chain[-2], chain[-1])
        if not r:
            square_free, _ = _divmod(p0, _poly_gcd(p0, _derivative(p0)))
            return real_root_count(QuarticPoly(square_free))
        chain.append(tuple(-c for c in r))

    def sign_at_inf(cs: Coeffs, positive: bool) -> int:
        s = 1 if cs[-1] > 0 else -1
        if not positive and (len(cs) - 1) % 2 == 1:
            s = -s
        return s

    def variations(positive: bool) -> int:
        signs = [sign_at_inf(c, positive) for c in chain if c]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(False) - variations(True)


def count_real_roots_upto(poly: QuarticPoly, bound) -> int:
    """Number of distinct real roots in (-infinity, bound]; separable input."""
    p0 = _trim(poly.coefficients)
    chain = [p0, _derivative(p0)]
    while _degree(chain[-1]) > 0:
        _, r = _divmod(chain[-2], chain[-1])
        if not r:
            raise InseparableInput("Sturm localization requires a separable input")
        chain.append(tuple(-c for c in r))

    x = as_rational(bound)
    signs_at_x = []
    signs_at_minus_inf = []
    for cs in chain:
        v = _eval(cs, x)
        if v != 0:
            signs_at_x.append(1 if v > 0 else -1)
        s = 1 if cs[-1] > 0 else -1
        if (len(cs) - 1) % 2 == 1:
            s = -s
        signs_at_minus_inf.append(s)

    def var(signs) -> int:
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return var(signs_at_minus_inf) - var(signs_at_x)


@dataclass(frozen=True)
class BiquadraticQuartic:
    """a*x^4 + b*x^2 + c with rational coefficients."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        object.__setattr__(self, "c", as_rational(self.c))

    def to_quartic(self) -> QuarticPoly:
        return QuarticPoly((self.c, Fraction(0), self.b, Fraction(0), self.a))

    def quadratic_discriminant(self) -> Fraction:
        """b^2 - 4ac of the associated quadratic in x^2."""
        return self.b * self.b - 4 * self.a * self.c

    def outer_product(self) -> Fraction:
        """a*c, the second quantity of the nonsquare irreducibility test."""
        return self.a * self.c


def biquadratic_irreducible(q: BiquadraticQuartic) -> bool:
    """Irreducibility over Q of a*x^4 + b*x^2 + c (a != 0), total and exact.

    If both b^2-4ac and ac are rational nonsquares the polynomial is
    irreducible and no factoring is needed; otherwise the quick test is
    inconclusive and the complete factorization oracle decides.
    """
    if q.a == 0:
        raise ValueError("leading coefficient must be nonzero")
    if (
        is_rational_square(q.quadratic_discriminant()) is None
        and is_rational_square(q.outer_product()) is None
    ):
        return True
    return len(factorization_oracle(q.to_quartic()).factors) == 1


@dataclass(frozen=True)
class FactorizationOverQ:
    """unit * prod(factors) == the input; factors primitive over Z, lc > 0."""

    unit: Fraction
    factors: tuple[tuple[int, ...], ...]

    def product(self) -> QuarticPoly:
        acc: Coeffs = (Fraction(self.unit),)
        for f in self.factors:
            acc = _mul(acc, tuple(Fraction(c) for c in f))
        return QuarticPoly(acc)


def _int_divisors(n: int) -> list[int]:
    return factor(n).divisors()


def _signed_divisors(n: int) -> list[int]:
    return [d for pos in _int_divisors(n) for d in (pos, -pos)]


def _int_eval_homog(cs: tuple[int, ...], p: int, q: int) -> int:
    """q^deg * P(p/q) for an integer polynomial, as an exact integer."""
    d = len(cs) - 1
    return sum(c * p**i * q ** (d - i) for i, c in enumerate(cs))


def _mul_int(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return tuple(out)


def _primitive_int(f) -> tuple[int, ...]:
    g = 0
    for v in f:
        g = gcd(g, abs(v))
    f = tuple(v // g for v in f)
    if f[-1] < 0:
        f = tuple(-v for v in f)
    return f


def _divide_out_root(cs: tuple[int, ...], p: int, q: int) -> tuple[int, ...]:
    """Divide a primitive integer poly by (q*x - p); exactness is asserted."""
    quo, rem = _divmod(tuple(Fraction(c) for c in cs), (Fraction(-p), Fraction(q)))
    assert not rem, "claimed root does not divide"
    den = 1
    for c in quo:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive_int([int(c * den) for c in quo])


def _rational_roots(cs: tuple[int, ...]) -> list[Fraction]:
    """All rational roots (without multiplicity) of a primitive integer poly."""
    roots = []
    if cs[0] == 0:
        roots.append(Fraction(0))
        while cs[0] == 0:
            cs = cs[1:]
        if len(cs) == 1:
            return roots
    for n in _int_divisors(cs[0]):
        for d in _int_divisors(cs[-1]):
            if gcd(n, d) != 1:
                continue
            for cand in (Fraction(n, d), Fraction(-n, d)):
                if _int_eval_homog(cs, cand.numerator, cand.denominator) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _quadratic_split_biquadratic(g: tuple[int, ...]):
    """Complete quadratic*quadratic splitting of A x^4 + B x^2 + C over Z.

    Matching coefficients forces either two even quadratics
    (a x^2 + c)(d x^2 + f), or cross terms with e = -b d / a and f = c d / a,
    which pins c^2 = a C / d and b^2 = a (2 c d - B) / d.  Both shapes reduce
    to divisor enumeration plus perfect-square checks, so the search is
    complete.
    """
    A, B, C = g[4], g[2], g[0]
    for a in _int_divisors(A):
        d = A // a
        for c in _signed_divisors(C):
            f = C // c
            if a * f + c * d == B:
                return ((c, 0, a), (f, 0, d))
        if (a * C) % d == 0:
            c2 = a * C // d
            if c2 <= 0:
                continue
            c0 = isqrt(c2)
            if c0 * c0 != c2:
                continue
            for c in (c0, -c0):
                num = a * (2 * c * d - B)
                if num % d:
                    continue
                b2 = num // d
                if b2 <= 0:
                    continue
                b = isqrt(b2)
                if b * b != b2:
                    continue
                if (b * d) % a or (c * d) % a:
                    continue
                pair = ((c, b, a), (c * d // a, -b * d // a, d))
                if _mul_int(pair[0], pair[1]) == g:
                    return pair
    return None


def _quadratic_split_general(g: tuple[int, ...]):
    """Box search for (a x^2 + b x + c)(d x^2 + e x + f) = g over Z.

    Coefficients of integer factors of a primitive quartic are bounded by
    (1 + l1-norm)^2, so the enumeration is complete.
    """
    A, C3, C0 = g[4], g[3], g[0]
    bound = (1 + sum(abs(c) for c in g)) ** 2
    for a in _int_divisors(A):
        d = A // a
        for c in _signed_divisors(C0):
            f = C0 // c
            for b in range(-bound, bound + 1):
                num = C3 - b * d
                if num % a:
                    continue
                e = num // a
                if abs(e) > bound:
                    continue
                if _mul_int((c, b, a), (f, e, d)) == g:
                    return ((c, b, a), (f, e, d))
    return None


def factorization_oracle(poly: QuarticPoly) -> FactorizationOverQ:
    """Complete factorization over Q of a polynomial of degree <= 4.

    Rational roots come from the rational root theorem with exact divisor
    enumeration; a rootless quartic can only split as quadratic*quadratic,
    found by exact integer search.  unit * prod(factors) == input is
    asserted before returning.
    """
    if poly.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    content, g = poly.primitive_integer_form()
    factors: list[tuple[int, ...]] = []

    while len(g) > 1:
        roots = _rational_roots(g)
        if not roots:
            break
        r = roots[0]
        factors.append(_primitive_int((-r.numerator, r.denominator)))
        g = _divide_out_root(g, r.numerator, r.denominator)

    deg = len(g) - 1
    if deg in (2, 3):
        # no rational roots remain, so degree 2 and 3 are irreducible
        factors.append(g)
    elif deg == 4:
        if g[3] == 0 and g[1] == 0:
            split = _quadratic_split_biquadratic(g)
        else:
            split = _quadratic_split_general(g)
        if split is None:
            factors.append(g)
        else:
            factors.extend(_primitive_int(f) for f in split)
    elif deg == 1:
        factors.append(g)

    factors.sort(key=lambda f: (len(f), f))
    result = FactorizationOverQ(content, tuple(factors))
    assert result.product() == poly, "factorization oracle product mismatch"
    return result
