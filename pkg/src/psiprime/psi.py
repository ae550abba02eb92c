"""Sum and product of element orders of finite abelian groups.

psi(G) is the plain integer sum of element orders.  psi'(G), the product,
is never materialized by default: already for a p-group of order p^n it is
p^E with E up to a_k * p^n, so the decimal expansion explodes while the
factored form {p: E} stays tiny.  Everything here therefore works on
:class:`FactoredInteger` values, with an explicit digit-budgeted
``materialize`` escape hatch.

For an abelian p-group with ascending exponents a_1 <= ... <= a_k and
n = a_1 + ... + a_k, the exponent of psi' is

    E = a_k * p^n - sum_{i=0}^{a_k - 1} p^i * f(i)

where f(i) = p^((k-j-1)*i + a_1+...+a_j) with j the number of exponents
<= i, clamped at k-1.  (f(i) equals |{x : o(x) divides p^i}| / p^i.)
Products over groups of pairwise coprime order combine as
psi'(G_1 x ... x G_k) = prod_i psi'(G_i)^(n_i) with n_i the product of the
other orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Mapping, Sequence

from mpmath import iv

from .arith import PRIMALITY_TEST_LIMIT, exact_div, factorize, is_prime
from .errors import ConsistencyError, DomainError, SizeLimitError
from .groups import AbelianGroup, OrderSpectrum, PGroupType, order_spectrum

# factored_compare materializes both sides when they fit in this many bits;
# beyond it, certified interval logarithms take over.
_MATERIALIZE_BITS = 1 << 14

# Interval-log precision ladder bounds (bits).
_IV_PREC_START = 64
_IV_PREC_LIMIT = 1 << 24


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer as {prime: exponent}, exponents arbitrary size.

    The empty map is 1.  Values are immutable and hashable, so they can key
    dicts in collision scans.
    """

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Iterable[tuple[int, int]] | Mapping[int, int] = ()):
        if isinstance(factors, Mapping):
            factors = factors.items()
        normalized = tuple(sorted((int(p), int(e)) for p, e in factors if e != 0))
        for i, (p, e) in enumerate(normalized):
            # keys past the primality-testing limit are trusted, mirroring
            # the assume_prime doctrine for group construction
            if p < 2 or (p < PRIMALITY_TEST_LIMIT and not is_prime(p)):
                raise DomainError(f"{p} is not a prime")
            if e < 0:
                raise DomainError(f"negative exponent {e} for prime {p}")
            if i > 0 and normalized[i - 1][0] == p:
                raise DomainError(f"duplicate prime {p}")
        object.__setattr__(self, "factors", normalized)

    @classmethod
    def from_int(cls, n: int) -> "FactoredInteger":
        return cls(factorize(n))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def is_one(self) -> bool:
        return not self.factors

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        acc = self.as_dict()
        for p, e in other.factors:
            acc[p] = acc.get(p, 0) + e
        return FactoredInteger(acc)

    def __pow__(self, n: int) -> "FactoredInteger":
        if n < 0:
            raise DomainError("negative powers leave the integers")
        return FactoredInteger((p, e * n) for p, e in self.factors)

    def digit_estimate(self) -> float:
        """Decimal digits of the materialized value (float estimate)."""
        return sum(e * math.log10(p) for p, e in self.factors) + 1.0

    def materialize(self, digit_limit: int) -> int:
        """The plain integer, refused if it would exceed digit_limit digits."""
        if digit_limit < 1:
            raise DomainError("digit_limit must be positive")
        if self.digit_estimate() > digit_limit + 0.5:
            raise SizeLimitError(
                f"value has ~{self.digit_estimate():.0f} digits, over the limit {digit_limit}"
            )
        value = 1
        for p, e in self.factors:
            value *= p**e
        return value

    def to_json_dict(self) -> dict:
        """JSON form {"factors": {...}}: decimal-string keys/values, keys
        in ascending numeric order."""
        return {"factors": {str(p): str(e) for p, e in self.factors}}

    @classmethod
    def from_json_dict(cls, d: dict) -> "FactoredInteger":
        return cls({int(p): int(e) for p, e in d["factors"].items()})

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e != 1 else str(p) for p, e in self.factors)


ONE = FactoredInteger(())


def f_eval(alphas: Sequence[int], p: int, i: int) -> int:
    """Piecewise step factor in the p-group exponent formula.

    With j = #{alphas <= i} clamped at k-1, returns
    p^((k-j-1)*i + alphas[0]+...+alphas[j-1]).  For k = 1 the exponent sum
    is empty and the value is 1 for every i.
    """
    alphas = tuple(alphas)
    if not alphas or any(alphas[j] > alphas[j + 1] for j in range(len(alphas) - 1)):
        raise DomainError(f"exponents {alphas} must be non-empty and ascending")
    if i < 0:
        raise DomainError(f"i = {i} must be non-negative")
    k = len(alphas)
    j = sum(1 for a in alphas if a <= i)
    j = min(j, k - 1)
    return p ** ((k - j - 1) * i + sum(alphas[:j]))


@cache
def psi_prime_exponent(p: int, alphas: tuple[int, ...]) -> int:
    """E with psi'(p-group) = p^E: a_k * p^n - sum_{i<a_k} p^i * f(i)."""
    n = sum(alphas)
    a_k = alphas[-1]
    return a_k * p**n - sum(p**i * f_eval(alphas, p, i) for i in range(a_k))


def psi_prime_pgroup(t: PGroupType) -> FactoredInteger:
    """Product of element orders of an abelian p-group, as {p: E}."""
    return FactoredInteger({t.p: psi_prime_exponent(t.p, t.alphas)})


def psi_prime_cyclic_closed_form(p: int, alpha: int) -> FactoredInteger:
    """Closed form for cyclic p-groups:
    psi'(Z_{p^a}) = p^((a*p^(a+1) - (a+1)*p^a + 1) / (p - 1)).

    The division must be exact; a remainder means the formula was
    transcribed wrong, so it raises ConsistencyError.
    """
    if alpha < 1:
        raise DomainError(f"alpha = {alpha} must be >= 1")
    numerator = alpha * p ** (alpha + 1) - (alpha + 1) * p**alpha + 1
    e = exact_div(numerator, p - 1, "cyclic closed form")
    return FactoredInteger({p: e})


def psi_prime_rank2_closed_form(p: int, alpha: int, beta: int) -> FactoredInteger:
    """Closed form for rank-two abelian p-groups Z_{p^a} x Z_{p^b}, a <= b:
    exponent (b*p^(a+b+2) - p^(a+b+1) - (b+1)*p^(a+b) + p^(2a+1) + 1) / (p^2 - 1),
    with the division checked exact."""
    if not 1 <= alpha <= beta:
        raise DomainError(f"need 1 <= alpha <= beta, got {alpha}, {beta}")
    numerator = (
        beta * p ** (alpha + beta + 2)
        - p ** (alpha + beta + 1)
        - (beta + 1) * p ** (alpha + beta)
        + p ** (2 * alpha + 1)
        + 1
    )
    e = exact_div(numerator, p**2 - 1, "rank-two closed form")
    return FactoredInteger({p: e})


def combine_coprime(parts: Sequence[tuple[FactoredInteger, int]]) -> FactoredInteger:
    """psi' of a direct product of groups with pairwise coprime orders:
    prod_i psi'_i ^ (n_i), n_i = product of the other orders."""
    orders = [order for _, order in parts]
    total = 1
    for order in orders:
        if order < 1:
            raise DomainError(f"group order {order} must be >= 1")
        if math.gcd(total, order) != 1:
            raise DomainError(f"orders {orders} are not pairwise coprime")
        total *= order
    acc: dict[int, int] = {}
    for value, order in parts:
        n_i = total // order
        for p, e in value.factors:
            acc[p] = acc.get(p, 0) + e * n_i
    return FactoredInteger(acc)


def psi_prime(G: AbelianGroup) -> FactoredInteger:
    """Product of element orders: per-Sylow exponent formula combined over
    the coprime primary components.  The trivial group gives 1."""
    parts = [(psi_prime_pgroup(t), t.order) for t in G.sylow_types()]
    return combine_coprime(parts)


def psi_sum(G: AbelianGroup) -> int:
    """Sum of element orders, exactly."""
    return sum(d * m for d, m in order_spectrum(G).entries)


def psi_prime_from_spectrum(s: OrderSpectrum) -> FactoredInteger:
    """Independent oracle: psi' = prod_d d^(m_d), accumulated factored."""
    acc: dict[int, int] = {}
    for d, m in s.entries:
        for p, e in factorize(d).items():
            acc[p] = acc.get(p, 0) + m * e
    return FactoredInteger(acc)


def _bit_bound(factors: Mapping[int, int]) -> int:
    # overestimate of log2 of the materialized value
    return sum(e * p.bit_length() for p, e in factors.items())


def _interval_log_sign(da: Mapping[int, int], db: Mapping[int, int]) -> int:
    # certified sign of sum(e*log p, da) - sum(e*log p, db), widening the
    # working precision until the enclosing interval excludes zero
    prec = _IV_PREC_START
    while prec <= _IV_PREC_LIMIT:
        iv.prec = prec
        delta = iv.mpf(0)
        for p, e in da.items():
            delta += iv.log(iv.mpf(p)) * e
        for p, e in db.items():
            delta -= iv.log(iv.mpf(p)) * e
        if delta.a > 0:
            return 1
        if delta.b < 0:
            return -1
        prec *= 2
    raise ConsistencyError("interval comparison failed to converge")  # pragma: no cover


def factored_compare(a: FactoredInteger, b: FactoredInteger) -> int:
    """Three-way comparison (-1, 0, 1) of factored integers, always exact.

    Structural short-circuits first: identical maps are equal, and common
    prime powers are divided out, which settles any pair sharing a single
    prime by exponent comparison.  What remains has disjoint support; small
    remainders are materialized and compared as plain integers, large ones
    by certified interval logarithms at increasing precision (two distinct
    integers always separate eventually).
    """
    if a.factors == b.factors:
        return 0
    da, db = a.as_dict(), b.as_dict()
    for p in set(da) & set(db):
        m = min(da[p], db[p])
        da[p] -= m
        db[p] -= m
        if da[p] == 0:
            del da[p]
        if db[p] == 0:
            del db[p]
    if not da:
        return -1  # a divides b strictly
    if not db:
        return 1
    if max(_bit_bound(da), _bit_bound(db)) <= _MATERIALIZE_BITS:
        va = math.prod(p**e for p, e in da.items())
        vb = math.prod(p**e for p, e in db.items())
        return (va > vb) - (va < vb)
    return _interval_log_sign(da, db)
