"""Integer number theory: factorisation, Pell equations, Kronecker symbols,
and bracketed zeta values.

All routines are exact; zeta_value returns a rational bracketing interval.
"""

import math
from fractions import Fraction

_SMALL_PRIME_LIMIT = 10 ** 6
_FACTOR_INPUT_LIMIT = 10 ** 18

_small_primes = None


def small_primes():
    """Primes below 10^6, sieved once and cached."""
    global _small_primes
    if _small_primes is None:
        n = _SMALL_PRIME_LIMIT
        sieve = bytearray([1]) * n
        sieve[0] = sieve[1] = 0
        for p in range(2, math.isqrt(n) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        _small_primes = [i for i, b in enumerate(sieve) if b]
    return _small_primes


def is_prime(n):
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n):
    # Brent's variant; n odd composite, no factor below the trial bound
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x, y, d = 2, 2, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factor(m):
    """Exact prime factorisation of m >= 1 as a sorted list with multiplicity.

    Trial division through 10^6, then Pollard rho.  Inputs beyond 10^18 are
    rejected (desk scale).
    """
    if m < 1:
        raise ValueError("factor() requires m >= 1")
    if m > _FACTOR_INPUT_LIMIT:
        raise ValueError("factor() input beyond 10^18")
    out = []
    for p in small_primes():
        if p * p > m:
            break
        while m % p == 0:
            out.append(p)
            m //= p
    if m > 1:
        stack = [m]
        while stack:
            n = stack.pop()
            if is_prime(n):
                out.append(n)
            else:
                d = _rho(n)
                stack.extend((d, n // d))
    return sorted(out)


def factor_counts(m):
    """Factorisation as {prime: exponent}."""
    counts = {}
    for p in factor(m):
        counts[p] = counts.get(p, 0) + 1
    return counts


def divisors(m):
    ds = [1]
    for p, e in factor_counts(m).items():
        ds = [d * p ** k for d in ds for k in range(e + 1)]
    return sorted(ds)


def kronecker(a, n):
    """Kronecker symbol (a/n) for n >= 1."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
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


def sqrt_cf_period(d):
    """Continued fraction of sqrt(d) = [a0; a1, ..., al] (one full period)."""
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError("d is a perfect square")
    terms = [a0]
    m, q, a = 0, 1, a0
    while True:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        terms.append(a)
        if q == 1:
            return terms


def pell(d):
    """Fundamental solution of x^2 - d y^2 = +-1 via the continued fraction of sqrt(d).

    Returns (x, y, norm_sign) with (x, y) the smallest positive solution and
    norm_sign = x^2 - d y^2 in {+1, -1}.
    """
    if d < 2:
        raise ValueError("pell() requires d >= 2")
    if math.isqrt(d) ** 2 == d:
        raise ValueError("d is a perfect square")
    terms = sqrt_cf_period(d)
    # convergent just before the end of the first period
    p_prev, p = 1, terms[0]
    q_prev, q = 0, 1
    for a in terms[1:-1]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    sign = p * p - d * q * q
    assert sign in (1, -1), (d, p, q, sign)
    return p, q, sign


def zeta_value(s, width=Fraction(1, 10 ** 9)):
    """Bracketing rational interval (lo, hi) around zeta(s), s >= 2 integer.

    Partial sum plus integral tail bounds:
        (M+1)^(1-s)/(s-1) <= sum_{j>M} j^-s <= M^(1-s)/(s-1).
    The partial sum is done in scaled-integer arithmetic so the bracket is
    rigorous.
    """
    if s < 2:
        raise ValueError("zeta_value() requires s >= 2")
    # choose M so the tail-bound gap is below half the target width
    m = 2
    while Fraction(1, m ** (s - 1) * (s - 1)) - Fraction(1, (m + 1) ** (s - 1) * (s - 1)) > width / 2:
        m = max(m + 1, int(m * 1.3))
    scale = 10 ** 24
    lo_sum = hi_sum = 0
    for j in range(1, m + 1):
        js = j ** s
        lo_sum += scale // js
        hi_sum += -((-scale) // js)  # ceil
    lo = Fraction(lo_sum, scale) + Fraction(1, (m + 1) ** (s - 1) * (s - 1))
    hi = Fraction(hi_sum, scale) + Fraction(1, m ** (s - 1) * (s - 1))
    assert hi - lo <= width, (s, float(hi - lo))
    return lo, hi


def zeta_midpoint(s):
    lo, hi = zeta_value(s)
    return float((lo + hi) / 2)
