"""Hilbert polynomials chi(O_X(nH)) = (H^3/6) n^3 + (c2.H/12) n and grouping by them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, TypeVar

from .core import CYInvariants, InputError, NonIntegralError

__all__ = [
    "SCAN_WINDOW",
    "VERY_AMPLE_MULTIPLE",
    "HilbertPolynomial",
    "hilbert_polynomial",
    "chi",
    "embedding_dimension",
    "group_by_hilbert",
    "group_polynomials",
]

# Integrality is only sampled on this window. It catches corrupted rows; it
# does not prove integrality for every n.
SCAN_WINDOW = range(-20, 21)

# 8H is very ample on every X in scope, so |8H| gives the common embedding.
VERY_AMPLE_MULTIPLE = 8

K = TypeVar("K", bound=Hashable)


@dataclass(frozen=True, order=True)
class HilbertPolynomial:
    a3: Fraction
    a1: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a3", Fraction(self.a3))
        object.__setattr__(self, "a1", Fraction(self.a1))
        if self.a3 <= 0:
            raise InputError(f"leading coefficient must be positive, got {self.a3}")
        for n in SCAN_WINDOW:
            value = self(n)
            if value.denominator != 1:
                raise NonIntegralError(f"chi(O({n}H)) = {value} is not an integer for {self}")

    def __call__(self, n: int) -> Fraction:
        return self.a3 * n**3 + self.a1 * n

    def __str__(self) -> str:
        return f"({self.a3}) n^3 + ({self.a1}) n"


def hilbert_polynomial(inv: CYInvariants) -> HilbertPolynomial:
    return HilbertPolynomial(Fraction(inv.H3, 6), Fraction(inv.c2H, 12))


def chi(poly: HilbertPolynomial, n: int) -> int:
    value = poly(n)
    if value.denominator != 1:
        raise NonIntegralError(f"chi(O({n}H)) = {value} is not an integer")
    return value.numerator


def embedding_dimension(inv: CYInvariants) -> int:
    """Dimension of the projective space that |8H| embeds X into."""
    return chi(hilbert_polynomial(inv), VERY_AMPLE_MULTIPLE) - 1


def group_by_hilbert(records: Iterable[tuple[K, CYInvariants]]) -> list[list[K]]:
    """Partition ids by equal Hilbert polynomial.

    Groups come out sorted by (H3, c2H) and ids are sorted inside each group,
    so the result does not depend on input order.
    """
    return [ids for _, ids in group_polynomials(records)]


def group_polynomials(
    records: Iterable[tuple[K, CYInvariants]],
) -> list[tuple[HilbertPolynomial, list[K]]]:
    """Like :func:`group_by_hilbert` but keeps each group's polynomial."""
    buckets: dict[HilbertPolynomial, list[K]] = defaultdict(list)
    for ident, inv in records:
        buckets[hilbert_polynomial(inv)].append(ident)
    return [(poly, sorted(buckets[poly])) for poly in sorted(buckets)]
