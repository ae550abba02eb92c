"""Finite abelian groups in primary decomposition, their enumeration by
order, and two independent element-order-spectrum oracles.

The counting oracle (:func:`order_spectrum`) uses the structure of abelian
p-groups: with ascending exponents a_1 <= ... <= a_k, the number of
solutions of x^(p^i) = e is p^(sum_j min(a_j, i)), so exact-order counts
fall out by successive differences, and multiplicities of coprime orders
multiply across primes.  The literal oracle (:func:`brute_force_spectrum`)
enumerates every element as a residue tuple and tallies lcm's; it exists
purely to distrust the counting oracle.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cache, cached_property
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

from .arith import factorize, require_prime
from .errors import DomainError, SizeLimitError
from .partitions import Partition, partitions_of

# Largest group order enumerate_abelian_groups accepts by default.
ENUMERATION_CAP = 10**6

# Largest group the literal element-enumeration oracle will walk.
BRUTE_FORCE_CAP = 10**5


@dataclass(frozen=True)
class PGroupType:
    """Isomorphism type of an abelian p-group: prime p and ascending
    cyclic-factor exponents a_1 <= a_2 <= ... <= a_k."""

    p: int
    alphas: tuple[int, ...]

    def __init__(self, p: int, alphas: Sequence[int]):
        alphas = tuple(alphas)
        if p < 2:
            raise DomainError(f"invalid prime {p}")
        if not alphas:
            raise DomainError("a p-group type needs at least one cyclic factor")
        for i, a in enumerate(alphas):
            if not isinstance(a, int) or a < 1:
                raise DomainError(f"exponent {a!r} is not a positive integer")
            if i > 0 and alphas[i - 1] > a:
                raise DomainError(f"exponents {alphas} are not ascending")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "alphas", alphas)

    @property
    def rank(self) -> int:
        return len(self.alphas)

    @cached_property
    def n(self) -> int:
        """Exponent of p in the group order."""
        return sum(self.alphas)

    @cached_property
    def order(self) -> int:
        return self.p**self.n


@dataclass(frozen=True)
class AbelianGroup:
    """Primary decomposition: (prime, exponent partition) pairs with
    strictly increasing primes.  The trivial group is the empty tuple."""

    components: tuple[tuple[int, Partition], ...]

    def __init__(self, components: Iterable[tuple[int, Partition]] = ()):
        components = tuple((p, q) for p, q in components)
        for i, (p, q) in enumerate(components):
            if p < 2:
                raise DomainError(f"invalid prime {p}")
            if not isinstance(q, Partition) or not q.parts:
                raise DomainError(f"component for prime {p} needs a non-empty partition")
            if i > 0 and components[i - 1][0] >= p:
                raise DomainError("component primes must be strictly increasing")
        object.__setattr__(self, "components", components)

    @cached_property
    def order(self) -> int:
        return prod(p**q.n for p, q in self.components)

    def cyclic_factors(self) -> list[int]:
        """Cyclic orders [p^a ...], primes ascending, exponents descending.

        This is exactly the bracketed list notation, e.g. Z4 x Z3^2 -> [4, 3, 3].
        """
        return [p**a for p, q in self.components for a in q.parts]

    def sylow_types(self) -> list[PGroupType]:
        """Per-prime types with ascending exponents (partition reversed)."""
        return [PGroupType(p, tuple(reversed(q.parts))) for p, q in self.components]


@dataclass(frozen=True)
class OrderSpectrum:
    """Map element order -> exact multiplicity, stored sorted by order."""

    entries: tuple[tuple[int, int], ...]

    def __init__(self, entries: Iterable[tuple[int, int]]):
        entries = tuple(sorted((int(d), int(m)) for d, m in entries))
        if not entries or entries[0] != (1, 1):
            raise DomainError("a spectrum must contain the identity: m_1 = 1")
        total = 0
        for i, (d, m) in enumerate(entries):
            if m < 1:
                raise DomainError(f"multiplicity of order {d} must be positive")
            if i > 0 and entries[i - 1][0] == d:
                raise DomainError(f"duplicate order {d}")
            total += m
        for d, _ in entries:
            if total % d != 0:
                raise DomainError(f"order {d} does not divide the group order {total}")
        object.__setattr__(self, "entries", entries)

    @cached_property
    def total(self) -> int:
        """Sum of multiplicities = the group order."""
        return sum(m for _, m in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def multiplicity(self, d: int) -> int:
        return self.as_dict().get(d, 0)


def partition_to_group_type(q: Partition, p: int, *, assume_prime: bool = False) -> PGroupType:
    """Turn an exponent partition into the abelian p-group type it indexes.

    The partition stores parts descending; the type stores them ascending.
    p is primality-tested below 2**31; larger p requires ``assume_prime``.
    """
    require_prime(p, assume_prime=assume_prime)
    if not q.parts:
        raise DomainError("the empty partition does not index a p-group type")
    return PGroupType(p, tuple(reversed(q.parts)))


def group_type_to_partition(t: PGroupType) -> Partition:
    """Inverse of :func:`partition_to_group_type`."""
    return Partition(tuple(reversed(t.alphas)))


def canonicalize(cyclic_orders: Sequence[int], *, cap: int = 10**12) -> AbelianGroup:
    """Canonical form of a direct product of cyclic groups.

    Each cyclic order is split into prime-power factors (CRT), and the
    per-prime exponents are collected into descending partitions, so any
    two isomorphic spellings yield identical values.
    """
    per_prime: dict[int, list[int]] = {}
    for q in cyclic_orders:
        if q < 2:
            raise DomainError(f"cyclic order {q} must be >= 2")
        for p, e in factorize(q, cap).items():
            per_prime.setdefault(p, []).append(e)
    components = tuple(
        (p, Partition(sorted(per_prime[p], reverse=True))) for p in sorted(per_prime)
    )
    return AbelianGroup(components)


def enumerate_abelian_groups(m: int, *, cap: int = ENUMERATION_CAP) -> list[AbelianGroup]:
    """All isomorphism types of abelian groups of order m.

    There are prod_p p(v_p(m)) of them.  Deterministic order: per-prime
    partitions ascend lexicographically, combined lexicographically with
    primes ascending.
    """
    if m < 1:
        raise DomainError(f"group order {m} must be >= 1")
    if m > cap:
        raise SizeLimitError(f"order {m} exceeds the enumeration cap {cap}")
    factors = factorize(m, cap)
    primes = sorted(factors)
    per_prime = [partitions_of(factors[p]) for p in primes]
    return [
        AbelianGroup(tuple(zip(primes, choice)))
        for choice in itertools.product(*per_prime)
    ]


@cache
def _pgroup_spectrum(p: int, alphas: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # Spectrum of the abelian p-group with the given exponent multiset:
    # |{x : o(x) | p^i}| = p^(sum_j min(a_j, i)); exact counts by differences.
    out = [(1, 1)]
    prev = 1
    for i in range(1, max(alphas) + 1):
        cur = p ** sum(min(a, i) for a in alphas)
        out.append((p**i, cur - prev))
        prev = cur
    return tuple(out)


def order_spectrum(G: AbelianGroup) -> OrderSpectrum:
    """Exact element-order spectrum via per-prime counting + convolution."""
    acc: dict[int, int] = {1: 1}
    for p, q in G.components:
        comp = _pgroup_spectrum(p, q.parts)
        acc = {
            da * db: ma * mb for da, ma in acc.items() for db, mb in comp
        }
    return OrderSpectrum(acc.items())


@cache
def _cyclic_element_orders(q: int) -> tuple[int, ...]:
    # order of r in the additive group Z_q
    return tuple(q // gcd(r, q) for r in range(q))


def brute_force_spectrum(G: AbelianGroup, *, cap: int = BRUTE_FORCE_CAP) -> OrderSpectrum:
    """Literal oracle: walk every element tuple, tally lcm's of component
    orders.  Capped because it is Theta(|G|) with a real constant."""
    if G.order > cap:
        raise SizeLimitError(f"|G| = {G.order} exceeds the brute-force cap {cap}")
    order_lists = [_cyclic_element_orders(q) for q in G.cyclic_factors()]
    tally = Counter(itertools.starmap(lcm, itertools.product(*order_lists)))
    return OrderSpectrum(tally.items())


def iter_abelian_groups_up_to(max_order: int) -> Iterator[tuple[int, AbelianGroup]]:
    """(order, group) for every abelian group of order 1..max_order."""
    for m in range(1, max_order + 1):
        for G in enumerate_abelian_groups(m):
            yield m, G
