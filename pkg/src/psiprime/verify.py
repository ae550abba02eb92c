"""Empirical verification harness: monotonicity of the psi' exponent along
the partition order, injectivity of psi' at fixed group order, the
cross-order collision census, and the psi_k distinguishability conjecture.

Monotonicity/injectivity failures would contradict proved statements, so
the test suite treats them as implementation bugs.  psi_k coincidences are
conjecture counterexample candidates: they are reported as findings, never
asserted away.
"""

from __future__ import annotations

import concurrent.futures
import itertools
from dataclasses import dataclass

from .errors import DomainError
from .groups import (
    AbelianGroup,
    enumerate_abelian_groups,
    iter_abelian_groups_up_to,
    partition_to_group_type,
)
from .partitions import Partition, partitions_of
from .psi import FactoredInteger, psi_prime, psi_prime_exponent
from .symmetric import SYMMETRIC_CAP, psi_all


def _group_sort_key(G: AbelianGroup):
    return (G.order, tuple((p, q.parts) for p, q in G.components))


@dataclass(frozen=True)
class MonotonicityReport:
    """psi' exponents for all p-groups of order p^n in ascending partition
    order; any adjacent non-increase lands in ``violations``."""

    p: int
    n: int
    rows: tuple[tuple[Partition, int], ...]
    violations: tuple[tuple[int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class InjectivityReport:
    """psi' for every abelian group of one order m; ``duplicates`` collects
    any value classes of size >= 2 (each one a theorem violation)."""

    m: int
    entries: tuple[tuple[AbelianGroup, FactoredInteger], ...]
    duplicates: tuple[tuple[AbelianGroup, ...], ...]

    @property
    def holds(self) -> bool:
        return not self.duplicates


@dataclass(frozen=True)
class CollisionReport:
    """Pairs of non-isomorphic groups (orders allowed to differ) sharing an
    identical psi' value, over all orders up to ``scope``."""

    scope: int
    pairs: tuple[tuple[AbelianGroup, AbelianGroup, FactoredInteger], ...]


@dataclass(frozen=True)
class ConjectureFReport:
    """For one order m: every unordered pair of distinct groups tested at
    every k in 1..m; any psi_k coincidence is a finding."""

    m: int
    pair_count: int
    coincidences: tuple[tuple[AbelianGroup, AbelianGroup, int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.coincidences


def check_theorem_c(p: int, n: int) -> MonotonicityReport:
    """Sweep all abelian p-groups of order p^n in ascending partition order
    and record every adjacent exponent non-increase.

    Cost is p(n) exponent evaluations; n <= 40 stays comfortable for p = 2,
    and the partition cap (64) bounds n outright.
    """
    if n < 1:
        raise DomainError(f"n = {n} must be >= 1")
    rows = []
    for q in partitions_of(n):
        t = partition_to_group_type(q, p)
        rows.append((q, psi_prime_exponent(t.p, t.alphas)))
    violations = tuple(
        (i, i + 1) for i in range(len(rows) - 1) if rows[i][1] >= rows[i + 1][1]
    )
    return MonotonicityReport(p=p, n=n, rows=tuple(rows), violations=violations)


def check_injectivity(m: int) -> InjectivityReport:
    """psi' over all abelian groups of order m, grouped by exact value."""
    entries = tuple((G, psi_prime(G)) for G in enumerate_abelian_groups(m))
    by_value: dict[FactoredInteger, list[AbelianGroup]] = {}
    for G, value in entries:
        by_value.setdefault(value, []).append(G)
    duplicates = tuple(
        tuple(sorted(gs, key=_group_sort_key))
        for value, gs in sorted(by_value.items(), key=lambda kv: kv[0].factors)
        if len(gs) >= 2
    )
    return InjectivityReport(m=m, entries=entries, duplicates=duplicates)


def find_cross_order_collisions(max_order: int) -> CollisionReport:
    """Group every abelian group of order <= max_order by its exact psi'
    value and report all cross-type coincidences.

    These exist: with max_order >= 48 the scan contains the order-36 /
    order-48 pair Z4 x Z3^2 and Z2^4 x Z3 with shared value 2^45 * 3^32.
    """
    by_value: dict[FactoredInteger, list[AbelianGroup]] = {}
    for _, G in iter_abelian_groups_up_to(max_order):
        by_value.setdefault(psi_prime(G), []).append(G)
    pairs = []
    for value, gs in by_value.items():
        if len(gs) < 2:
            continue
        gs = sorted(gs, key=_group_sort_key)
        for a, b in itertools.combinations(gs, 2):
            pairs.append((a, b, value))
    pairs.sort(key=lambda abv: (_group_sort_key(abv[0]), _group_sort_key(abv[1])))
    return CollisionReport(scope=max_order, pairs=tuple(pairs))


def check_conjecture_f(m: int, *, cap: int = SYMMETRIC_CAP) -> ConjectureFReport:
    """Test whether each single psi_k separates all abelian groups of
    order m.  A coincidence is reported, not raised: it would be a
    counterexample candidate, not an implementation error."""
    groups = enumerate_abelian_groups(m)
    values = [psi_all(G, cap=cap) for G in groups]
    coincidences = []
    pair_count = 0
    for (i, a), (j, b) in itertools.combinations(enumerate(groups), 2):
        pair_count += 1
        for k in range(1, m + 1):
            if values[i][k - 1] == values[j][k - 1]:
                coincidences.append((a, b, k, values[i][k - 1]))
    return ConjectureFReport(m=m, pair_count=pair_count, coincidences=tuple(coincidences))


@dataclass(frozen=True)
class InjectivitySweep:
    """check_injectivity over every order 1..max_order."""

    max_order: int
    groups_checked: int
    failures: tuple[InjectivityReport, ...]

    @property
    def holds(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class ConjectureFSweep:
    """check_conjecture_f over every order 1..max_order."""

    max_order: int
    pairs_checked: int
    failures: tuple[ConjectureFReport, ...]

    @property
    def holds(self) -> bool:
        return not self.failures


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        import os

        return os.cpu_count() or 1
    if jobs < 1:
        raise DomainError(f"jobs = {jobs} must be >= 1")
    return jobs


def _fan_out(fn, args, jobs):
    # deterministic: results returned in argument order regardless of jobs
    if jobs == 1:
        return [fn(a) for a in args]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, args, chunksize=64))


def sweep_injectivity(max_order: int, *, jobs: int | None = 1) -> InjectivitySweep:
    """Run check_injectivity for every m <= max_order (optionally across a
    process pool; the merged result does not depend on the worker count)."""
    reports = _fan_out(check_injectivity, range(1, max_order + 1), _resolve_jobs(jobs))
    checked = sum(len(r.entries) for r in reports)
    failures = tuple(r for r in reports if not r.holds)
    return InjectivitySweep(max_order=max_order, groups_checked=checked, failures=failures)


def sweep_conjecture_f(max_order: int, *, jobs: int | None = 1) -> ConjectureFSweep:
    """Run check_conjecture_f for every m <= max_order."""
    reports = _fan_out(check_conjecture_f, range(1, max_order + 1), _resolve_jobs(jobs))
    pairs = sum(r.pair_count for r in reports)
    failures = tuple(r for r in reports if not r.holds)
    return ConjectureFSweep(max_order=max_order, pairs_checked=pairs, failures=failures)
