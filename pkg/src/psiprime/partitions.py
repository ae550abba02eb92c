"""Integer partitions with the total lexicographic order used throughout
the package.

A partition of n is stored as its weakly decreasing positive parts with no
trailing zeros; the zero-padded length-n tuple exists only transiently
inside :func:`lex_compare`.  ``partitions_of`` yields partitions directly
in ascending lexicographic order of those padded tuples, so (1,...,1) comes
first and (n) last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import DomainError, NotationError, SizeLimitError

# Hard ceiling on the size of partitions we generate.  p(64) = 1,741,630,
# which is the practical limit for materializing the full list in memory.
PARTITION_CAP = 64

# Partition lists for n below this bound are memoized (the enumeration
# sweeps request them constantly); larger lists are regenerated on demand
# to keep memory bounded.
_MEMO_LIMIT = 24
_memo: dict[int, tuple["Partition", ...]] = {}


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive integers; indexes abelian p-group types."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(parts)
        for i, x in enumerate(parts):
            if not isinstance(x, int) or x < 1:
                raise DomainError(f"partition part {x!r} is not a positive integer")
            if i > 0 and parts[i - 1] < x:
                raise DomainError(f"partition parts {parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @cached_property
    def n(self) -> int:
        """Sum of the parts (the integer being partitioned)."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.parts) + "]"


def parse_partition(text: str) -> Partition:
    """Parse the bracketed textual form, e.g. ``[3,1,1]`` (``[]`` is empty)."""
    s = text.strip()
    if not s.startswith("["):
        raise NotationError("expected '['", 0)
    if not s.endswith("]"):
        raise NotationError("expected closing ']'", len(s))
    inner = s[1:-1].strip()
    if not inner:
        return Partition(())
    parts = []
    pos = 1
    for token in inner.split(","):
        if not token.strip().isdigit():
            raise NotationError(f"expected a positive integer, got {token.strip()!r}", pos)
        parts.append(int(token))
        pos += len(token) + 1
    try:
        return Partition(parts)
    except DomainError as exc:
        raise NotationError(str(exc), 1) from exc


def _ascending(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # Descending-part tuples of partitions of n with parts <= max_part,
    # emitted in ascending lex order of the padded tuples.
    if n == 0:
        yield ()
        return
    for head in range(1, min(n, max_part) + 1):
        for tail in _ascending(n - head, head):
            yield (head,) + tail


def iter_partitions(n: int) -> Iterator[Partition]:
    """Lazily yield all partitions of n in ascending lexicographic order."""
    if n < 0:
        raise DomainError(f"cannot partition {n}")
    if n > PARTITION_CAP:
        raise SizeLimitError(f"n = {n} exceeds the partition cap {PARTITION_CAP}")
    for parts in _ascending(n, n if n else 1):
        yield Partition(parts)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, strictly ascending under :func:`lex_compare`.

    The result has exactly p(n) entries.  Beware that p(n) grows fast:
    p(40) = 37338 and p(64) above 1.7 million (the cap).
    """
    if 0 <= n < _MEMO_LIMIT:
        got = _memo.get(n)
        if got is None:
            got = _memo[n] = tuple(iter_partitions(n))
        return got
    return tuple(iter_partitions(n))


def lex_compare(a: Partition, b: Partition) -> int:
    """Three-way comparison (-1, 0, 1) of the zero-padded length-n tuples.

    Only partitions of the same integer are comparable.
    """
    if a.n != b.n:
        raise DomainError(f"cannot lex-compare partitions of {a.n} and {b.n}")
    n = a.n
    ta = a.parts + (0,) * (n - len(a.parts))
    tb = b.parts + (0,) * (n - len(b.parts))
    if ta < tb:
        return -1
    if ta > tb:
        return 1
    return 0
