"""Completions of Q: squares, Hilbert symbols, Hensel lifts, two squares.

Places are the real place and one finite place per prime.  All decisions are
exact: squareness in Q_p comes from the valuation/unit criterion, Hilbert
symbols from the closed tame/wild formulas, and square roots are certified
residues modulo p^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .errors import NotALocalSquare
from .rational import (
    as_rational,
    factor,
    is_prime,
    legendre_symbol,
    modular_inverse,
    rational_mod,
    split_padic_unit,
)


@dataclass(frozen=True)
class RealPlace:
    def __str__(self) -> str:
        return "real"


@dataclass(frozen=True)
class FinitePlace:
    prime: int

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    def __str__(self) -> str:
        return str(self.prime)


Place = Union[RealPlace, FinitePlace]

REAL_PLACE = RealPlace()


def place_from_string(s: str) -> Place:
    return REAL_PLACE if s == "real" else FinitePlace(int(s))


@dataclass(frozen=True)
class PAdicApproximation:
    """The residue class center mod prime**precision_exponent."""

    prime: int
    center: int
    precision_exponent: int

    def __post_init__(self):
        if self.precision_exponent < 1:
            raise ValueError("precision exponent must be positive")
        mod = self.prime**self.precision_exponent
        if not 0 <= self.center < mod:
            raise ValueError("center must be reduced mod p^k")

    @property
    def modulus(self) -> int:
        return self.prime**self.precision_exponent

    def is_square_root_of(self, c) -> bool:
        """Check the defining congruence center^2 = c mod p^k exactly."""
        target = rational_mod(as_rational(c), self.modulus)
        return self.center * self.center % self.modulus == target


def is_square_in_R(r) -> bool:
    return as_rational(r) >= 0


def is_square_in_Qp(r, p: int) -> bool:
    """r in (Q_p^x)^2: even valuation and unit part a square unit.

    For odd p the unit must be a square mod p; for p = 2 it must be 1 mod 8.
    """
    r = as_rational(r)
    if r == 0:
        raise ValueError("0 is excluded; test nonzero classes only")
    v, u = split_padic_unit(r, p)
    if v % 2:
        return False
    if p == 2:
        return rational_mod(u, 8) == 1
    return legendre_symbol(rational_mod(u, p), p) == 1


def _epsilon(u_mod4: int) -> int:
    """(u-1)/2 mod 2 for a 2-adic unit, read off from u mod 4."""
    return 0 if u_mod4 == 1 else 1


def _omega(u_mod8: int) -> int:
    """(u^2-1)/8 mod 2 for a 2-adic unit, read off from u mod 8."""
    return 0 if u_mod8 in (1, 7) else 1


def hilbert_symbol(a, b, place: Place) -> int:
    """Hilbert symbol (a, b) at a place of Q, in {-1, +1}.

    +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the completion.
    Real place: sign inspection.  Odd p: the tame formula
    (-1)^(alpha beta eps(p)) (u|p)^beta (v|p)^alpha.  p = 2: the wild formula
    (-1)^(eps(u) eps(v) + alpha omega(v) + beta omega(u)).
    """
    a = as_rational(a)
    b = as_rational(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if isinstance(place, RealPlace):
        return -1 if (a < 0 and b < 0) else 1
    p = place.prime
    alpha, u = split_padic_unit(a, p)
    beta, v = split_padic_unit(b, p)
    if p == 2:
        e = _epsilon(rational_mod(u, 4)) * _epsilon(rational_mod(v, 4))
        e += alpha * _omega(rational_mod(v, 8))
        e += beta * _omega(rational_mod(u, 8))
        return -1 if e % 2 else 1
    sign = 1
    if (alpha % 2) and (beta % 2) and (p - 1) // 2 % 2 == 1:
        sign = -sign
    if beta % 2:
        sign *= legendre_symbol(rational_mod(u, p), p)
    if alpha % 2:
        sign *= legendre_symbol(rational_mod(v, p), p)
    return sign


def hilbert_symbol_everywhere(a, b) -> dict[str, int]:
    """Symbols at the real place and every prime where they can be -1."""
    a = as_rational(a)
    b = as_rational(b)
    primes = {2}
    for r in (a, b):
        primes.update(factor(r.numerator).primes())
        primes.update(factor(r.denominator).primes())
    out = {"real": hilbert_symbol(a, b, REAL_PLACE)}
    for p in sorted(primes):
        out[str(p)] = hilbert_symbol(a, b, FinitePlace(p))
    return out


def _sqrt_mod_odd_prime(a: int, p: int) -> int:
    """Tonelli-Shanks square root mod an odd prime; a must be a QR."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # find the least quadratic non-residue deterministically
    n = 2
    while legendre_symbol(n, p) != -1:
        n += 1
    s = p - 1
    e = 0
    while s % 2 == 0:
        s //= 2
        e += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(n, s, p)
    r = e
    while True:
        t = b
        m = 0
        while t != 1:
            t = t * t % p
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m


def hensel_lift_sqrt(c, p: int, target_precision: int) -> PAdicApproximation:
    """Certified square root of a unit square c to the requested precision.

    Requires v_p(c) = 0 and c a square in Q_p (callers strip even valuations
    first); raises NotALocalSquare otherwise.  Among the residues z mod p^k
    with z^2 = c, the one with the smallest nonnegative representative is
    returned, so certificates are canonical.
    """
    c = as_rational(c)
    if c == 0:
        raise NotALocalSquare("0 has no unit square root")
    v, _ = split_padic_unit(c, p)
    if v != 0 or not is_square_in_Qp(c, p):
        raise NotALocalSquare(f"{c} is not a unit square in Q_{p}")
    k = target_precision
    modulus = p**k
    target = rational_mod(c, modulus)

    if p == 2:
        z = 1  # 1^2 = c mod 8 for every unit square c
        m = 3
        while m < k:
            if z * z % (1 << (m + 1)) != target % (1 << (m + 1)):
                z += 1 << (m - 1)
            m += 1
        z %= modulus
        roots = {z % modulus, (-z) % modulus}
        if k >= 3:
            roots.add((z + (modulus >> 1)) % modulus)
            roots.add((-z + (modulus >> 1)) % modulus)
        best = min(r for r in roots if r * r % modulus == target)
        return PAdicApproximation(2, best, k)

    z = _sqrt_mod_odd_prime(target % p, p)
    prec = 1
    while prec < k:
        # Newton step doubles the precision: z -> (z + c/z) / 2
        prec = min(2 * prec, k)
        step_mod = p**prec
        z = (
            (z + rational_mod(c, step_mod) * modular_inverse(z, step_mod))
            * modular_inverse(2, step_mod)
            % step_mod
        )
    z %= modulus
    assert z * z % modulus == target
    best = min(z, modulus - z)
    return PAdicApproximation(p, best, k)


def cornacchia_prime_two_squares(p: int) -> tuple[int, int]:
    """Write a prime p = 2 or p = 1 mod 4 as c^2 + d^2 with c <= d.

    Cornacchia's descent: starting from the larger square root of -1 mod p,
    run the Euclidean algorithm until the remainder drops below sqrt(p).
    """
    if p == 2:
        return (1, 1)
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"{p} is not 2 or a prime = 1 mod 4")
    r = _sqrt_mod_odd_prime(p - 1, p)
    if r < p - r:
        r = p - r
    a, b = p, r
    while b * b > p:
        a, b = b, a % b
    c = b
    d2 = p - c * c
    d = isqrt(d2)
    assert d * d == d2
    return (min(c, d), max(c, d))


def _gaussian_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gaussian_power(base: tuple[int, int], e: int) -> tuple[int, int]:
    acc = (1, 0)
    for _ in range(e):
        acc = _gaussian_mul(acc, base)
    return acc


#: Above this many Gaussian-conjugation combinations, settle for the first.
_TWO_SQUARES_COMBO_CAP = 100_000


def sum_of_two_squares(n) -> Optional[tuple[Fraction, Fraction]]:
    """Constructive y^2 + z^2 = n over Q, or None when impossible.

    Writes n = M / q^2 with M = numerator * denominator, represents each
    prime = 1 mod 4 of M by Cornacchia and combines multiplicatively in the
    Gaussian integers; primes = 3 mod 4 must occur to even powers.  Among
    the conjugation choices the representation with the smallest larger
    coordinate is taken, so the output (0 <= y <= z) is canonical.
    """
    n = as_rational(n)
    if n < 0:
        raise ValueError("negative numbers are not sums of two squares")
    if n == 0:
        return (Fraction(0), Fraction(0))
    q = n.denominator
    m = n.numerator * n.denominator
    combos: list[tuple[int, int]] = [(1, 0)]
    scale = 1
    for prime, e in factor(m).factors:
        if prime == 2:
            g = _gaussian_power((1, 1), e)
            combos = [_gaussian_mul(c, g) for c in combos]
            continue
        if prime % 4 == 3:
            if e % 2:
                return None
            scale *= prime ** (e // 2)
            continue
        cx, cy = cornacchia_prime_two_squares(prime)
        if len(combos) * (e + 1) <= _TWO_SQUARES_COMBO_CAP:
            choices = [
                _gaussian_mul(_gaussian_power((cx, cy), k), _gaussian_power((cx, -cy), e - k))
                for k in range(e + 1)
            ]
        else:
            choices = [_gaussian_power((cx, cy), e)]
        combos = [_gaussian_mul(c, ch) for c in combos for ch in choices]
    pairs = {tuple(sorted((abs(x) * scale, abs(y) * scale))) for x, y in combos}
    a, b = min(pairs, key=lambda p: (p[1], p[0]))
    result = (Fraction(a, q), Fraction(b, q))
    assert result[0] ** 2 + result[1] ** 2 == n
    return result
