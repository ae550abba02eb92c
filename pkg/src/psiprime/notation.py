"""Group notation: the multiplicative form ``Z4xZ3^2``, the bracketed
cyclic-order list ``[4,3,3]``, and the canonical JSON object
``{"2": [2], "3": [1, 1]}``.  All three denote the same group; parsing any
of them canonicalizes.
"""

from __future__ import annotations

import re

from .arith import require_prime
from .errors import DomainError, NotationError
from .groups import AbelianGroup, OrderSpectrum, canonicalize
from .partitions import Partition

_INT = re.compile(r"\d+")


def parse_group(text: str) -> AbelianGroup:
    """Parse ``Z4xZ3^2`` / ``[4,3,3]`` (``[]`` or ``1`` for the trivial group).

    Raises NotationError carrying the offset of the first bad character.
    """
    s = text.strip()
    if not s:
        raise NotationError("empty group notation", 0)
    if s == "1":
        return AbelianGroup(())
    if s.startswith("["):
        return _parse_list_form(s)
    if s[0] in "Zz":
        return _parse_multiplicative_form(s)
    raise NotationError(f"expected 'Z...' or '[...]', got {s[0]!r}", 0)


def _parse_list_form(s: str) -> AbelianGroup:
    if not s.endswith("]"):
        raise NotationError("expected closing ']'", len(s))
    body = s[1:-1]
    if not body.strip():
        return AbelianGroup(())
    orders = []
    pos = 1
    for token in body.split(","):
        stripped = token.strip()
        at = pos + token.index(stripped) if stripped else pos
        if not stripped.isdigit():
            raise NotationError(f"expected a cyclic order, got {stripped!r}", at)
        q = int(stripped)
        if q < 2:
            raise NotationError(f"cyclic order {q} must be >= 2", at)
        orders.append(q)
        pos += len(token) + 1
    return canonicalize(orders)


def _parse_multiplicative_form(s: str) -> AbelianGroup:
    orders: list[int] = []
    pos = 0
    while True:
        if pos >= len(s) or s[pos] not in "Zz":
            raise NotationError("expected 'Z'", pos)
        pos += 1
        m = _INT.match(s, pos)
        if m is None:
            raise NotationError("expected digits after 'Z'", pos)
        q = int(m.group())
        if q < 2:
            raise NotationError(f"cyclic order {q} must be >= 2", pos)
        pos = m.end()
        count = 1
        if pos < len(s) and s[pos] == "^":
            pos += 1
            m = _INT.match(s, pos)
            if m is None:
                raise NotationError("expected exponent digits after '^'", pos)
            count = int(m.group())
            if count < 1:
                raise NotationError("exponent must be >= 1", pos)
            pos = m.end()
        orders.extend([q] * count)
        if pos == len(s):
            break
        if s[pos] not in "xX":
            raise NotationError(f"expected 'x' between factors, got {s[pos]!r}", pos)
        pos += 1
    return canonicalize(orders)


def format_group(G: AbelianGroup) -> str:
    """Canonical multiplicative notation, e.g. ``Z4xZ3^2`` (trivial -> ``1``)."""
    if not G.components:
        return "1"
    pieces = []
    for p, q in G.components:
        run_value, run_len = None, 0
        for a in q.parts:
            v = p**a
            if v == run_value:
                run_len += 1
            else:
                if run_value is not None:
                    pieces.append((run_value, run_len))
                run_value, run_len = v, 1
        pieces.append((run_value, run_len))
    return "x".join(f"Z{v}" if k == 1 else f"Z{v}^{k}" for v, k in pieces)


def group_to_json_dict(G: AbelianGroup) -> dict[str, list[int]]:
    """Canonical JSON form: prime (decimal string) -> descending parts."""
    return {str(p): list(q.parts) for p, q in G.components}


def spectrum_to_json_dict(s: OrderSpectrum) -> dict:
    """JSON form of a spectrum: every integer as a decimal string, orders
    ascending numerically."""
    return {
        "order": str(s.total),
        "spectrum": {str(d): str(m) for d, m in s.entries},
    }


def group_from_json_dict(d: dict) -> AbelianGroup:
    """Parse the canonical JSON form (keys may arrive in any order)."""
    components = []
    for key, parts in d.items():
        if not str(key).isdigit():
            raise DomainError(f"group JSON key {key!r} is not a prime")
        p = int(key)
        require_prime(p)
        if not isinstance(parts, (list, tuple)):
            raise DomainError(f"group JSON value for {p} must be a list of parts")
        components.append((p, Partition(tuple(int(x) for x in parts))))
    components.sort(key=lambda pq: pq[0])
    return AbelianGroup(tuple(components))
