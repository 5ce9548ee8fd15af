"""Betti-number bookkeeping for the semistable degeneration of X.

Only dimensions are tracked. The central fibre W_0 = V_1 u V_2 u E_1 u ... u E_m
has m + 2 components; each exceptional E_j is a P^3 meeting V_1 u V_2 in two
planes. Everything here is integer arithmetic following the Mayer-Vietoris
and Clemens-Schmid rank counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ConsistencyError, InputError

__all__ = [
    "DegenerationTrace",
    "clemens_schmid_h2",
    "semistable_bookkeeping",
    "h11_from_degeneration",
]


@dataclass(frozen=True)
class DegenerationTrace:
    m: int
    h2_Y: int
    k: int
    r_components: int
    h2_W0_prime: int
    h2_W0: int
    h2_Wt: int

    def __post_init__(self) -> None:
        if self.r_components != self.m + 2:
            raise ConsistencyError(f"{self.r_components} components for m = {self.m}")
        if self.h2_W0 != self.h2_W0_prime:
            raise ConsistencyError(f"h2(W0) = {self.h2_W0} differs from h2(W0') = {self.h2_W0_prime}")
        if self.h2_Wt != self.h2_W0 - self.m - 1:
            raise ConsistencyError(f"h2(Wt) = {self.h2_Wt} differs from h2(W0) - m - 1")

    def lines(self) -> list[str]:
        return [
            f"m = {self.m}, h2(Y) = {self.h2_Y}, k = {self.k}",
            f"components of W0: r = m + 2 = {self.r_components}",
            f"h2(W0') = 2*h2(Y) + m + 1 - k = {self.h2_W0_prime}",
            f"h2(W0) = h2(W0') + m - m = {self.h2_W0}",
            f"h2(Wt) = h2(W0) - r + 1 = {self.h2_Wt}",
            f"h11(X) = 2*h2(Y) - k = {self.h2_Wt}",
        ]


def _check(name: str, value: object, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {value}")
    return value


def _check_k(h2_Y: int, k: int) -> None:
    _check("h2_Y", h2_Y, 0)
    _check("k", k, 0)
    if k > h2_Y:
        raise InputError(f"k = {k} exceeds h2_Y = {h2_Y}")


def clemens_schmid_h2(h2_W0: int, r: int) -> int:
    """h^2 of the smooth fibre from h^2 of an r-component central fibre."""
    _check("r", r, 1)
    h2_Wt = h2_W0 - r + 1
    if h2_Wt < 0:
        raise InputError(f"h2(W0) = {h2_W0} with r = {r} gives negative h2(Wt) = {h2_Wt}")
    return h2_Wt


def semistable_bookkeeping(h2_Y: int, k: int, m: int) -> DegenerationTrace:
    _check_k(h2_Y, k)
    _check("m", m, 1)

    # V_1 is Y blown up at its m singular points, V_2 additionally along C.
    h2_V1 = h2_Y + m
    h2_V2 = h2_Y + 1 + m
    # Image in H^2(D~): k from Y, one class per singular point.
    restriction_rank = k + m
    h2_W0_prime = h2_V1 + h2_V2 - restriction_rank

    # Each E_j = P^3 adds one class and each H_1j u H_2j removes one.
    h2_E = [1] * m
    h2_H = [1] * m
    h2_W0 = h2_W0_prime + sum(h2_E) - sum(h2_H)

    r = m + 2
    h2_Wt = clemens_schmid_h2(h2_W0, r)

    if h2_W0_prime != 2 * h2_Y + m + 1 - k:
        raise ConsistencyError(f"h2(W0') = {h2_W0_prime} != 2*{h2_Y} + {m} + 1 - {k}")
    if h2_Wt != 2 * h2_Y - k:
        raise ConsistencyError(f"h2(Wt) = {h2_Wt} != 2*{h2_Y} - {k}")
    return DegenerationTrace(
        m=m,
        h2_Y=h2_Y,
        k=k,
        r_components=r,
        h2_W0_prime=h2_W0_prime,
        h2_W0=h2_W0,
        h2_Wt=h2_Wt,
    )


def h11_from_degeneration(h2_Y: int, k: int) -> int:
    _check_k(h2_Y, k)
    return 2 * h2_Y - k
