"""Compiled integer kernels for the bulk enumerative searches.

The exhaustive scans (empty-point-search corroboration to height 10^4,
rational point hunts on genus-1 quartics) test tens of millions of integer
candidates; these run as numba-jitted machine code.  Every kernel has a
pure-Python twin built on the exact factoring in :mod:`chatelet.rational`,
used both as a fallback when the jitted path cannot guarantee integer-width
safety and as an independent oracle in the test suite.  Kernels only filter:
any witness they report is re-verified with exact arithmetic by the caller.
"""

from __future__ import annotations

from math import gcd, isqrt

from .rational import factor

try:
    import numpy as np
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

# int64 safety margins for the jitted paths
GENERAL_VALUE_LIMIT = 1 << 51
SPLIT_FACTOR_LIMIT = 1 << 31
CURVE_VALUE_LIMIT = 1 << 62


def is_sum_of_two_squares_int(n: int) -> bool:
    """Exact decision: is n >= 0 a sum of two integer squares.

    True iff every prime = 3 mod 4 divides n to an even power.  May raise
    FactoringExceededBudget on adversarially large inputs.
    """
    if n < 0:
        return False
    if n == 0:
        return True
    for p, e in factor(n).factors:
        if p % 4 == 3 and e % 2 == 1:
            return False
    return True


def canonical_pq_candidates(hmax: int):
    """Positive finite rationals p/q of height 1..hmax in canonical order.

    Canonical order is (height, |numerator|, denominator) with, globally,
    the positive sign visited before the negative one; this generator yields
    the positive representatives only.
    """
    for h in range(1, hmax + 1):
        if h == 1:
            yield (1, 1)
            continue
        for n in range(1, h):
            if gcd(n, h) == 1:
                yield (n, h)
        for q in range(1, h):
            if gcd(h, q) == 1:
                yield (h, q)


def first_two_squares_biquadratic_py(A: int, B: int, C: int, hmax: int):
    """First positive x = p/q (canonical order) with N = P(x) > 0 a sum of
    two rational squares, for even P = A x^4 + B x^2 + C.  Exact reference
    implementation."""
    for p, q in canonical_pq_candidates(hmax):
        n = A * p**4 + B * p * p * q * q + C * q**4
        if n > 0 and is_sum_of_two_squares_int(n):
            return p, q
    return None


def curve_square_points_py(coeffs: tuple[int, ...], hmax: int):
    """All (p, q) with gcd=1, q>0, height<=hmax and f(p/q) a rational square,
    for an integer quartic f.  Exact reference implementation."""
    c0, c1, c2, c3, c4 = coeffs
    hits = []
    for q in range(1, hmax + 1):
        for p in range(-hmax, hmax + 1):
            if gcd(abs(p), q) != 1:
                continue
            n = c4 * p**4 + c3 * p**3 * q + c2 * p * p * q * q + c1 * p * q**3 + c0 * q**4
            if n < 0:
                continue
            s = isqrt(n)
            if s * s == n:
                hits.append((p, q))
    return hits


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _gcd64(a, b):
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True)
    def _isqrt64(n):
        if n <= 0:
            return 0
        s = int(n**0.5)
        while s > 0 and s * s > n:
            s -= 1
        while (s + 1) * (s + 1) <= n:
            s += 1
        return s

    @njit(cache=True)
    def _icbrt64(n):
        if n <= 0:
            return 0
        s = int(n ** (1.0 / 3.0))
        while s > 0 and s * s * s > n:
            s -= 1
        while (s + 1) * (s + 1) * (s + 1) <= n:
            s += 1
        return s

    @njit(cache=True)
    def _powmod32(a, e, m):
        # m < 2**32: products fit int64
        r = 1
        a %= m
        while e:
            if e & 1:
                r = r * a % m
            a = a * a % m
            e >>= 1
        return r

    @njit(cache=True)
    def _is_prime32(n):
        # deterministic Miller-Rabin, bases {2, 7, 61}, valid for n < 4.759e9
        if n < 2:
            return False
        for p in (2, 3, 5, 7, 11, 13):
            if n % p == 0:
                return n == p
        d = n - 1
        r = 0
        while d % 2 == 0:
            d //= 2
            r += 1
        for a in (2, 7, 61):
            if a % n == 0:
                continue  # the base 61 must not be used on n = 61 itself
            x = _powmod32(a, d, n)
            if x == 1 or x == n - 1:
                continue
            ok = False
            for _ in range(r - 1):
                x = x * x % n
                if x == n - 1:
                    ok = True
                    break
            if not ok:
                return False
        return True

    @njit(cache=True)
    def _rho32(n):
        # Brent-style rho for composite odd n < 2**32; deterministic c sweep
        c = 1
        while True:
            x = 2
            y = 2
            d = 1
            it = 0
            while d == 1 and it < 1 << 20:
                x = (x * x + c) % n
                y = (y * y + c) % n
                y = (y * y + c) % n
                diff = x - y if x > y else y - x
                if diff == 0:
                    break
                d = _gcd64(diff, n)
                it += 1
            if d != 1 and d != n:
                return d
            c += 1

    @njit(cache=True)
    def _ts_ok_u32(n):
        # n < 2**31: True iff n is a sum of two squares (n >= 1)
        while n % 2 == 0:
            n //= 2
        if n == 1:
            return True
        # trial division to the cube root, rejecting odd 3-mod-4 exponents
        d = 3
        while d * d * d <= n:
            if n % d == 0:
                e = 0
                while n % d == 0:
                    n //= d
                    e += 1
                if (d & 3) == 3 and (e & 1) == 1:
                    return False
            d += 2
        if n == 1:
            return True
        # cofactor is p, p^2 or p*q with p, q above the cube root
        s = _isqrt64(n)
        if s * s == n:
            return True
        if _is_prime32(n):
            return (n & 3) != 3
        f = _rho32(n)
        g = n // f
        # f and g are distinct primes: three factors cannot all exceed the
        # cube root, and the square case was handled above
        return (f & 3) != 3 and (g & 3) != 3

    @njit(cache=True)
    def _mulmod51(a, b, m):
        # float-assisted mulmod, exact for m < 2**51 (quotient off by <= 2)
        q = int(float(a) * float(b) / float(m))
        r = a * b - q * m  # int64 wraparound cancels exactly
        while r < 0:
            r += m
        while r >= m:
            r -= m
        return r

    @njit(cache=True)
    def _powmod51(a, e, m):
        r = 1
        a %= m
        while e:
            if e & 1:
                r = _mulmod51(r, a, m)
            a = _mulmod51(a, a, m)
            e >>= 1
        return r

    @njit(cache=True)
    def _is_prime51(n):
        # deterministic Miller-Rabin for n < 3.317e24 >> 2**51
        if n < 2:
            return False
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
            if n % p == 0:
                return n == p
        d = n - 1
        r = 0
        while d % 2 == 0:
            d //= 2
            r += 1
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            if a % n == 0:
                continue
            x = _powmod51(a, d, n)
            if x == 1 or x == n - 1:
                continue
            ok = False
            for _ in range(r - 1):
                x = _mulmod51(x, x, n)
                if x == n - 1:
                    ok = True
                    break
            if not ok:
                return False
        return True

    @njit(cache=True)
    def _rho_step51(x, c, n):
        x = _mulmod51(x, x, n) + c
        return x - n if x >= n else x

    @njit(cache=True)
    def _rho51(n):
        c = 1
        while True:
            x = 2
            y = 2
            d = 1
            it = 0
            while d == 1 and it < 1 << 22:
                x = _rho_step51(x, c, n)
                y = _rho_step51(_rho_step51(y, c, n), c, n)
                diff = x - y if x > y else y - x
                if diff == 0:
                    break
                d = _gcd64(diff, n)
                it += 1
            if d != 1 and d != n:
                return d
            c += 1

    @njit(cache=True)
    def _ts_ok_u51(n):
        # n < 2**51: sum-of-two-squares decision with full factorization
        while n % 2 == 0:
            n //= 2
        if n == 1:
            return True
        d = 3
        lim = _icbrt64(n)
        while d <= lim and d * d * d <= n:
            if n % d == 0:
                e = 0
                while n % d == 0:
                    n //= d
                    e += 1
                if (d & 3) == 3 and (e & 1) == 1:
                    return False
                lim = _icbrt64(n)
            d += 2
        if n == 1:
            return True
        # cofactor is p, p^2 or p*q with p, q above the cube root
        s = _isqrt64(n)
        if s * s == n:
            return True
        if _is_prime51(n):
            return (n & 3) != 3
        f = _rho51(n)
        g = n // f
        # f and g are distinct primes (see _ts_ok_u32)
        return (f & 3) != 3 and (g & 3) != 3

    @njit(cache=True)
    def _first_point_general(A, B, C, hmax):
        """First canonical (p, q) with A p^4 + B p^2 q^2 + C q^4 > 0 and a
        sum of two squares.  Returns (1, p, q) or (0, 0, 0)."""
        for h in range(1, hmax + 1):
            if h == 1:
                n = A + B + C
                if n > 0 and _ts_ok_u51(n):
                    return 1, 1, 1
                continue
            hh = h * h
            h4 = hh * hh
            for p in range(1, h):
                if _gcd64(p, h) != 1:
                    continue
                pp = p * p
                n = A * pp * pp + B * pp * hh + C * h4
                if n > 0 and _ts_ok_u51(n):
                    return 1, p, h
            for q in range(1, h):
                if _gcd64(h, q) != 1:
                    continue
                qq = q * q
                n = A * h4 + B * hh * qq + C * qq * qq
                if n > 0 and _ts_ok_u51(n):
                    return 1, h, q
        return 0, 0, 0

    @njit(cache=True)
    def _split_value_ok(p, q, a1, g1, a2, g2, ksign, specials, spar):
        """Two-squares test for kappa * (a1 p^2 + g1 q^2)(a2 p^2 + g2 q^2).

        ``specials`` lists every prime that can divide kappa or both factors;
        ``spar`` carries the exponent parity of kappa at each.  After those
        primes are stripped the two factors are coprime and each must be a
        sum of two squares on its own.
        """
        pp = p * p
        qq = q * q
        u = a1 * pp + g1 * qq
        v = a2 * pp + g2 * qq
        sgn = ksign
        if u < 0:
            sgn = -sgn
            u = -u
        if v < 0:
            sgn = -sgn
            v = -v
        if u == 0 or v == 0 or sgn <= 0:
            return False
        for i in range(specials.shape[0]):
            r = specials[i]
            par = spar[i]
            while u % r == 0:
                u //= r
                par ^= 1
            while v % r == 0:
                v //= r
                par ^= 1
            if par == 1 and (r & 3) == 3:
                return False
        return _ts_ok_u32(u) and _ts_ok_u32(v)

    @njit(cache=True)
    def _first_point_split(a1, g1, a2, g2, ksign, specials, spar, hmax):
        for h in range(1, hmax + 1):
            if h == 1:
                if _split_value_ok(1, 1, a1, g1, a2, g2, ksign, specials, spar):
                    return 1, 1, 1
                continue
            for p in range(1, h):
                if _gcd64(p, h) != 1:
                    continue
                if _split_value_ok(p, h, a1, g1, a2, g2, ksign, specials, spar):
                    return 1, p, h
            for q in range(1, h):
                if _gcd64(h, q) != 1:
                    continue
                if _split_value_ok(h, q, a1, g1, a2, g2, ksign, specials, spar):
                    return 1, h, q
        return 0, 0, 0

    @njit(cache=True)
    def _curve_scan(c0, c1, c2, c3, c4, hmax, even, out):
        """Collect (p, q) with f(p/q) a rational square, heights <= hmax.

        For even f only p >= 0 is scanned (the caller mirrors).  Returns the
        hit count, or -1 if the output buffer overflowed.
        """
        count = 0
        for q in range(1, hmax + 1):
            qq = q * q
            q3 = qq * q
            q4 = qq * qq
            lo = 0 if even else -hmax
            for p in range(lo, hmax + 1):
                ap = -p if p < 0 else p
                if _gcd64(ap, q) != 1:
                    continue
                pp = p * p
                n = c4 * pp * pp + c3 * pp * p * q + c2 * pp * qq + c1 * p * q3 + c0 * q4
                if n < 0:
                    continue
                s = _isqrt64(n)
                if s * s == n:
                    if count >= out.shape[0]:
                        return -1
                    out[count, 0] = p
                    out[count, 1] = q
                    count += 1
        return count


def first_two_squares_biquadratic(A: int, B: int, C: int, hmax: int):
    """First canonical positive x = p/q with P(x) > 0 a sum of two squares.

    Dispatches to the jitted kernel when the values provably fit in int64;
    otherwise runs the exact Python search.
    """
    limit = 3 * max(abs(A), abs(B), abs(C)) * (hmax + 1) ** 4
    if NUMBA_AVAILABLE and limit < GENERAL_VALUE_LIMIT:
        found, p, q = _first_point_general(A, B, C, hmax)
        return (int(p), int(q)) if found else None
    return first_two_squares_biquadratic_py(A, B, C, hmax)


def first_two_squares_split(
    a1: int, g1: int, a2: int, g2: int, kappa: int, hmax: int
):
    """Like :func:`first_two_squares_biquadratic` for values that factor as
    kappa * (a1 x^2 + g1)(a2 x^2 + g2); supports much larger heights because
    each factor stays small."""
    bound = max(abs(a1) + abs(g1), abs(a2) + abs(g2)) * (hmax + 1) ** 2
    if not (NUMBA_AVAILABLE and bound < SPLIT_FACTOR_LIMIT):
        A = a1 * a2 * kappa
        B = (a1 * g2 + a2 * g1) * kappa
        C = g1 * g2 * kappa
        return first_two_squares_biquadratic_py(A, B, C, hmax)
    specials: set[int] = {2}
    for n in (kappa, a1, a2, a1 * g2 - a2 * g1):
        if n != 0:
            specials.update(factor(n).primes())
    kfac = dict(factor(kappa).factors) if abs(kappa) != 1 else {}
    sp = sorted(specials)
    spar = [kfac.get(r, 0) % 2 for r in sp]
    ksign = 1 if kappa > 0 else -1
    found, p, q = _first_point_split(
        a1,
        g1,
        a2,
        g2,
        ksign,
        np.asarray(sp, dtype=np.int64),
        np.asarray(spar, dtype=np.int64),
        hmax,
    )
    return (int(p), int(q)) if found else None


def curve_square_points(coeffs: tuple[int, ...], hmax: int):
    """All (p, q) of height <= hmax with f(p/q) a rational square."""
    c0, c1, c2, c3, c4 = coeffs
    limit = sum(abs(c) for c in coeffs) * (hmax + 1) ** 4
    if not (NUMBA_AVAILABLE and limit < CURVE_VALUE_LIMIT):
        return curve_square_points_py(coeffs, hmax)
    even = c1 == 0 and c3 == 0
    cap = 65536
    while True:
        out = np.empty((cap, 2), dtype=np.int64)
        n = _curve_scan(c0, c1, c2, c3, c4, hmax, even, out)
        if n >= 0:
            break
        cap *= 8
    hits = [(int(out[i, 0]), int(out[i, 1])) for i in range(n)]
    if even:
        mirrored = [(-p, q) for (p, q) in hits if p != 0]
        hits.extend(mirrored)
    return hits
