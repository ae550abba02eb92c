"""Elementary symmetric functions of the element-order multiset and the
order polynomial prod_x (X - o(x)).

psi_k is read off the generating product prod_d (1 + d*X)^(m_d) expanded
with exact binomial coefficients, which costs O(|G|^2) bignum operations
instead of the C(|G|, k) subset walk.  The order polynomial is built the
other way, by literally multiplying the linear factors (X - d), so the
sign relation between the two is a genuine cross-check and not an
identity of one code path with itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import DomainError, SizeLimitError
from .groups import AbelianGroup, order_spectrum

# Default ceiling on |G|; psi_|G| already has thousands of digits here.
# Raise per call via the cap argument if you know what you are doing.
SYMMETRIC_CAP = 512


@dataclass(frozen=True)
class OrderPolynomial:
    """prod_x (X - o(x)) with exact coefficients, ascending powers.

    Monic of degree |G|; coefficient of X^(n-k) is (-1)^k * psi_k(G).
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        coeffs = tuple(coeffs)
        if not coeffs or coeffs[-1] != 1:
            raise DomainError("an order polynomial is monic")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mag, sign = abs(c), "-" if c < 0 else "+"
            power = "" if j == 0 else ("X" if j == 1 else f"X^{j}")
            coeff = str(mag) if (j == 0 or mag != 1) else ""
            body = coeff + ("*" if coeff and power else "") + power
            terms.append(body if not terms else f"{sign} {body}")
            if len(terms) == 1 and c < 0:
                terms[0] = "-" + terms[0]
        return " ".join(terms) if terms else "0"


def _check_cap(G: AbelianGroup, cap: int) -> int:
    n = G.order
    if n > cap:
        raise SizeLimitError(f"|G| = {n} exceeds the symmetric-function cap {cap}")
    return n


def psi_all(G: AbelianGroup, *, cap: int = SYMMETRIC_CAP) -> list[int]:
    """[psi_1, ..., psi_n]: all elementary symmetric functions of the
    order multiset.  psi_1 is the order sum, psi_n the order product."""
    n = _check_cap(G, cap)
    acc = [1]
    for d, m in order_spectrum(G).entries:
        factor = [comb(m, j) * d**j for j in range(m + 1)]
        out = [0] * (len(acc) + m)
        for i, a in enumerate(acc):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        acc = out
    assert len(acc) == n + 1
    return acc[1:]


def psi_k(G: AbelianGroup, k: int, *, cap: int = SYMMETRIC_CAP) -> int:
    """Single elementary symmetric value psi_k, 1 <= k <= |G|."""
    n = _check_cap(G, cap)
    if not 1 <= k <= n:
        raise DomainError(f"k = {k} out of range 1..{n}")
    return psi_all(G, cap=cap)[k - 1]


def order_polynomial(G: AbelianGroup, *, cap: int = SYMMETRIC_CAP) -> OrderPolynomial:
    """prod_x (X - o(x)) by repeated multiplication with linear factors."""
    _check_cap(G, cap)
    coeffs = [1]
    for d, m in order_spectrum(G).entries:
        for _ in range(m):
            # multiply by (X - d)
            coeffs.append(1)
            for j in range(len(coeffs) - 2, 0, -1):
                coeffs[j] = coeffs[j - 1] - d * coeffs[j]
            coeffs[0] = -d * coeffs[0]
    return OrderPolynomial(coeffs)
