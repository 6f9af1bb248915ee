"""Exact multiplicative number theory.

Factorization, the divisor sum sigma, the Dedekind psi function, Euler's
totient and the Jordan totient J_2, primorials, and two Robin-type
inequality deltas evaluated with certified signs.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "CriterionDelta",
    "factorize",
    "sigma",
    "psi",
    "phi",
    "jordan2",
    "phi_and_jordan2",
    "first_primes",
    "primorial",
    "robin_delta",
    "psi_primorial_delta",
    "is_prime",
    "is_squarefree",
    "divisors",
]

# Euler-Mascheroni constant and zeta(2) = pi^2/6, 200+ digits.
# Source: OEIS A001620 and A013661 (cross-checked against mpmath at 230 digits).
EULER_GAMMA = Decimal(
    "0.57721566490153286060651209008240243104215933593992359880576723488486"
    "772677766467093694706329174674951463144724980708248096050401448654283"
    "622417399764492353625350033374293733773767394279259525824709491600873"
)
ZETA2 = Decimal(
    "1.64493406684822643647241516664602518921894990120679843773555822937000"
    "747040320087383362890061975870530400431896233719067962872468700500778"
    "793510294633086627683173330936776260509525100687214005479681155879"
)

BASE_PRECISION = 50
WIDE_PRECISION = 200
_TRIAL_LIMIT = 10**6

Factorization = list[tuple[int, int]]


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
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


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n  # noqa: E731
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs.

    >>> factorize(12)
    [(2, 2), (3, 1)]
    >>> factorize(1)
    []
    """
    _check_positive(n)
    pairs: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m and p <= _TRIAL_LIMIT:
        while m % p == 0:
            pairs[p] = pairs.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        if p * p > m:
            pairs[m] = pairs.get(m, 0) + 1
        else:
            _split(m, pairs)
    return sorted(pairs.items())


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def sigma(n: int) -> int:
    """Sum of the positive divisors of ``n``."""
    result = 1
    for p, e in factorize(n):
        result *= (p ** (e + 1) - 1) // (p - 1)
    return result


def psi(n: int) -> int:
    """Dedekind psi: n * prod over primes p | n of (1 + 1/p)."""
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p + 1)
    return result


def phi(n: int) -> int:
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def jordan2(n: int) -> int:
    """Jordan totient J_2(n) = n^2 * prod (1 - 1/p^2)."""
    result = 1
    for p, e in factorize(n):
        result *= p ** (2 * (e - 1)) * (p * p - 1)
    return result


def phi_and_jordan2(n: int) -> tuple[int, int]:
    f = phi(n)
    return f, f * psi(n)


@lru_cache(maxsize=8)
def _primes_up_to(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def first_primes(k: int) -> tuple[int, ...]:
    """The first ``k`` primes."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ()
    # Rosser's bound p_k < k (ln k + ln ln k) for k >= 6
    limit = 15 if k < 6 else int(k * (math.log(k) + math.log(math.log(k)))) + 1
    return _primes_up_to(limit)[:k]


def primorial(k: int) -> int:
    """Product of the first ``k`` primes."""
    _check_positive(k)
    return math.prod(first_primes(k))


@dataclass(frozen=True)
class CriterionDelta:
    """A certified inequality delta.

    ``value`` is the midpoint at ``precision`` significant digits and
    ``radius`` a rigorous bound on its absolute error.
    """

    value: Decimal
    sign: str
    inputs_echo: int
    radius: Decimal
    precision: int

    @property
    def certified(self) -> bool:
        return self.sign in ("negative", "positive") or self.radius == 0


@lru_cache(maxsize=4)
def _exp_gamma(prec: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = prec
        return EULER_GAMMA.exp()


def _signed(value: Decimal, radius: Decimal) -> str | None:
    if value - radius > 0:
        return "positive"
    if value + radius < 0:
        return "negative"
    return None


def _certify(evaluate, echo: int) -> CriterionDelta:
    # evaluate(precision) -> (value, radius)
    for prec in (BASE_PRECISION, WIDE_PRECISION):
        value, radius = evaluate(prec)
        sign = _signed(value, radius)
        if sign is not None:
            return CriterionDelta(value, sign, echo, radius, prec)
    # Both deltas involve e^gamma, so no analytic zero is possible here.
    raise ArithmeticError(f"could not certify the sign of the delta at input {echo}")


def robin_delta(q: int) -> CriterionDelta:
    """sigma(q) / (q log log q) - e^gamma with a certified sign.

    Negative for every q >= 5041 under the Riemann hypothesis; 5040 is the
    largest known exception.
    """
    _check_positive(q)
    if q <= 2:
        raise ValueError("robin_delta needs q >= 3 so that log log q > 0")
    s = sigma(q)

    def evaluate(prec: int) -> tuple[Decimal, Decimal]:
        with localcontext() as ctx:
            ctx.prec = prec + 5
            loglog = Decimal(q).ln().ln()
            term = Decimal(s) / (Decimal(q) * loglog)
            bound = +_exp_gamma(ctx.prec)
            value = term - bound
            # ln ln q >= 0.094 for q >= 3 amplifies the ln error by at most ~11
            radius = (abs(term) + bound) * Decimal(10) ** (3 - prec)
        return value, radius

    return _certify(evaluate, q)


def psi_primorial_delta(k: int) -> CriterionDelta:
    """psi(N_k) / (N_k log log N_k) - e^gamma / zeta(2) for the k-th primorial N_k.

    ``psi(N_k)/N_k`` is formed exactly as prod(1 + 1/p); ``log log N_k`` is
    ``log(sum log p)`` so that N_k is never converted to a float.
    """
    _check_positive(k)
    if k < 2:
        raise ValueError("psi_primorial_delta needs k >= 2")
    primes = first_primes(k)
    ratio = Fraction(1)
    for p in primes:
        ratio *= Fraction(p + 1, p)

    def evaluate(prec: int) -> tuple[Decimal, Decimal]:
        with localcontext() as ctx:
            ctx.prec = prec + 5
            log_n = sum((Decimal(p).ln() for p in primes), Decimal(0))
            loglog = log_n.ln()
            term = Decimal(ratio.numerator) / Decimal(ratio.denominator) / loglog
            bound = _exp_gamma(ctx.prec) / ZETA2
            value = term - bound
            # each of the k logarithms contributes one rounding to log N_k
            radius = (abs(term) + bound) * (k + 10) * Decimal(10) ** (3 - prec)
        return value, radius

    return _certify(evaluate, k)
