"""Small exact-integer helpers: primality, trial-division factorization,
checked division.

Everything here is plain ``int`` arithmetic; Python integers are already
arbitrary precision, so exactness is free.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ConsistencyError, DomainError, SizeLimitError

# Primality is decided by trial division below this bound; larger inputs
# must be vouched for by the caller (``assume_prime=True``).
PRIMALITY_TEST_LIMIT = 2**31

# Default ceiling for trial-division factorization of a single integer.
FACTORIZATION_CAP = 10**12


@lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2**31 (trial division)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int, *, assume_prime: bool = False) -> None:
    """Raise DomainError unless p is prime.

    Inputs below 2**31 are tested outright.  Above that, trial division is
    no longer reasonable, so the caller must pass ``assume_prime=True`` to
    take responsibility for primality.
    """
    if p < 2:
        raise DomainError(f"{p} is not a prime")
    if assume_prime:
        return
    if p >= PRIMALITY_TEST_LIMIT:
        raise DomainError(
            f"{p} >= 2**31: too large to primality-test here; "
            "pass assume_prime=True to trust it"
        )
    if not is_prime(p):
        raise DomainError(f"{p} is not a prime")


def factorize(n: int, cap: int = FACTORIZATION_CAP) -> dict[int, int]:
    """Prime factorization {p: exponent} by trial division, primes ascending.

    factorize(1) == {}.  Raises SizeLimitError for n above ``cap``.
    """
    if n < 1:
        raise DomainError(f"cannot factorize {n}: must be >= 1")
    if n > cap:
        raise SizeLimitError(f"{n} exceeds the factorization cap {cap}")
    factors: dict[int, int] = {}
    for d in (2, 3):
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
    d = 5
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def exact_div(numerator: int, denominator: int, what: str = "division") -> int:
    """Integer division that must be exact; a remainder is a ConsistencyError."""
    q, r = divmod(numerator, denominator)
    if r != 0:
        raise ConsistencyError(
            f"{what}: {numerator} is not divisible by {denominator} (remainder {r})"
        )
    return q
