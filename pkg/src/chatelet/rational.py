"""Exact integer and rational arithmetic: factoring, valuations, squares.

Everything in this module works on Python ints and ``fractions.Fraction``
values and is exact; there is no floating point anywhere.  All functions are
pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .errors import FactoringExceededBudget

Rational = Fraction

#: Trial division bound used before Pollard rho takes over.
TRIAL_DIVISION_LIMIT = 1_000_000

#: Total Pollard-rho iterations allowed per ``factor`` call.
DEFAULT_RHO_BUDGET = 400_000

# Deterministic Miller-Rabin witness set, valid for all n < 3.317e24
# (covers 64-bit inputs with a wide margin).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to a normalized Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def height(r) -> int:
    """Naive height: max(|p|, q) for p/q in lowest terms; height(0) = 0."""
    r = as_rational(r)
    if r == 0:
        return 0
    return max(abs(r.numerator), r.denominator)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Uses the fixed Miller-Rabin base set below its proven limit and falls
    back to trial division above it, so a True answer is never probabilistic.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _MR_LIMIT:
        return _miller_rabin(n)
    return _is_prime_trial(n)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _is_prime_trial(n: int, budget: int = 10_000_000) -> bool:
    d = 49
    steps = 0
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
        steps += 1
        if steps > budget:
            raise FactoringExceededBudget(
                f"primality of {n} not settled within trial budget"
            )
    return True


@dataclass(frozen=True)
class Factorization:
    """Exact signed factorization: sign * prod(p_i ** e_i), primes increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        last = 1
        for p, e in self.factors:
            if p <= last or e <= 0:
                raise ValueError("factors must be (prime, exponent>0), increasing")
            last = p

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors of |n|, sorted ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def _pollard_brent(n: int, budget: list[int]) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite n.

    ``budget`` is a single-element mutable iteration counter shared across
    recursive splits; exhausting it raises FactoringExceededBudget.
    """
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            if budget[0] <= 0:
                raise FactoringExceededBudget(f"rho budget exhausted factoring {n}")
            budget[0] -= 1
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factor(
    n: int,
    *,
    trial_limit: int = TRIAL_DIVISION_LIMIT,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> Factorization:
    """Factor a nonzero integer exactly, with deterministic output order."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    found: dict[int, int] = {}

    for p in (2, 3):
        while n % p == 0:
            n //= p
            found[p] = found.get(p, 0) + 1
    d = 5
    while d * d <= n and d <= trial_limit:
        for q in (d, d + 2):
            while n % q == 0:
                n //= q
                found[q] = found.get(q, 0) + 1
        d += 6

    if n > 1:
        budget = [rho_budget]
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                found[m] = found.get(m, 0) + 1
                continue
            f = _pollard_brent(m, budget)
            stack.append(f)
            stack.append(m // f)

    return Factorization(sign, tuple(sorted(found.items())))


def padic_valuation(r, p: int) -> int:
    """v_p of a nonzero rational: v_p(numerator) - v_p(denominator)."""
    r = as_rational(r)
    if r == 0:
        raise ValueError("v_p(0) is not defined")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    v = 0
    num = abs(r.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = r.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def split_padic_unit(r, p: int) -> tuple[int, Fraction]:
    """Write r = p**v * u with u a p-adic unit; returns (v, u)."""
    r = as_rational(r)
    v = padic_valuation(r, p)
    return v, r / Fraction(p) ** v


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, via quadratic reciprocity."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1} for an odd prime p.

    Computed by the reciprocity chain, not Euler's criterion, so the two
    routes can be checked against each other.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return jacobi_symbol(a, p)


def is_rational_square(r) -> Optional[Fraction]:
    """Exact square-root witness of a rational, or None if not a square."""
    r = as_rational(r)
    if r < 0:
        return None
    if r == 0:
        return Fraction(0)
    sn = isqrt(r.numerator)
    sd = isqrt(r.denominator)
    if sn * sn == r.numerator and sd * sd == r.denominator:
        return Fraction(sn, sd)
    return None


def squarefree_part(n: int) -> tuple[int, int]:
    """Split n = squarefree * cofactor**2; returns (squarefree, cofactor)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    fac = factor(n)
    squarefree = fac.sign
    cofactor = 1
    for p, e in fac.factors:
        if e % 2:
            squarefree *= p
        cofactor *= p ** (e // 2)
    return squarefree, cofactor


def rational_squarefree_representative(r) -> int:
    """Squarefree integer representing r modulo nonzero rational squares."""
    r = as_rational(r)
    if r == 0:
        raise ValueError("0 has no squarefree representative")
    return squarefree_part(r.numerator * r.denominator)[0]


def modular_inverse(a: int, m: int) -> int:
    """Inverse of a mod m; raises if gcd(a, m) != 1."""
    g, x = _extended_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible mod {m}")
    return x % m


def _extended_gcd(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_r, old_s


def rational_mod(r, modulus: int) -> int:
    """Reduce a rational with denominator prime to the modulus."""
    r = as_rational(r)
    if gcd(r.denominator, modulus) != 1:
        raise ValueError(f"denominator of {r} is not invertible mod {modulus}")
    return r.numerator * modular_inverse(r.denominator, modulus) % modulus
