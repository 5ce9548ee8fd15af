"""Invariants of the Calabi-Yau double cover X -> Y.

Every function takes a :class:`~cycover.core.FanoRecord` and returns an exact
integer. A fractional intermediate is an error, never rounded.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    ConsistencyError,
    CYInvariants,
    FanoRecord,
    InputError,
    as_integer,
)

__all__ = [
    "UnprovenInvariantWarning",
    "L2Verdict",
    "Verdict",
    "EXCEPTIONAL_CASE",
    "is_exceptional",
    "cy_h11",
    "cy_H3",
    "cy_c2H",
    "cy_euler",
    "cy_h12",
    "euler_branch_surface",
    "compute_all",
    "exclude_l2",
]

# (-K^3, N) for which H = -pi^*K_Y cannot be forced by integrality.
EXCEPTIONAL_CASE = (Fraction(4), 4)

_CAVEAT = (
    "(-K^3, N) = (4, 4): only h11 and e are established; "
    "H3, c2H and h12 assume H = -pi^*K_Y"
)


class UnprovenInvariantWarning(UserWarning):
    """Issued when an invariant is queried for the (4, 4) record."""


class Verdict(enum.Enum):
    FORCED_L1 = "ForcedL1"
    AMBIGUOUS = "Ambiguous"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class L2Verdict:
    """Outcome of testing whether H could be half of -pi^*K_Y.

    If it were, both H^3 = -K^3/4 and chi(O(H)) - 2 = (-K^3 - N)/8 would have
    to be integers.
    """

    verdict: Verdict
    h3_over_4_integral: bool
    chi_defect_integral: bool

    def __post_init__(self) -> None:
        both = self.h3_over_4_integral and self.chi_defect_integral
        if (self.verdict is Verdict.AMBIGUOUS) != both:
            raise ConsistencyError(f"verdict {self.verdict} contradicts the integrality flags")

    @property
    def forced(self) -> bool:
        return self.verdict is Verdict.FORCED_L1


def is_exceptional(rec: FanoRecord) -> bool:
    return (rec.minus_K3, rec.N) == EXCEPTIONAL_CASE


def _warn_if_exceptional(rec: FanoRecord, what: str) -> None:
    if is_exceptional(rec):
        warnings.warn(f"{what}: {_CAVEAT}", UnprovenInvariantWarning, stacklevel=3)


def cy_h11(rec: FanoRecord) -> int:
    """h^{1,1}(X) = 2 h^2(Y) - k."""
    h11 = 2 * rec.h2_Y - rec.k
    if h11 <= 0:
        raise InputError(f"h11 = 2*{rec.h2_Y} - {rec.k} = {h11} is not positive")
    return h11


def cy_H3(rec: FanoRecord) -> int:
    _warn_if_exceptional(rec, "H3")
    H3 = as_integer(2 * rec.minus_K3, "H3")
    if H3 <= 0:
        raise InputError(f"H3 = {H3} is not positive")
    return H3


def cy_c2H(rec: FanoRecord) -> int:
    _warn_if_exceptional(rec, "c2H")
    return as_integer(48 - 3 * rec.N - 2 * rec.K3, "c2H")


def cy_euler(rec: FanoRecord) -> int:
    return as_integer(2 * rec.e_Y + 4 * rec.K3 + 2 * rec.N - 48, "e")


def cy_h12(rec: FanoRecord) -> int:
    _warn_if_exceptional(rec, "h12")
    h12 = as_integer(25 - rec.e_Y - 2 * rec.K3 - rec.N, "h12")
    if h12 < 0:
        raise InputError(f"h12 = {h12} is negative")
    return h12


def euler_branch_surface(rec: FanoRecord) -> int:
    """Euler number of the branch surface S' in the blow-up of Y."""
    return as_integer(48 - 3 * rec.N - 4 * rec.K3, "e(S')")


def compute_all(rec: FanoRecord) -> CYInvariants:
    """Assemble all five invariants and cross-check them.

    Raises InputError when the records are inconsistent with the h12 formula,
    which presumes Picard number one (h2_Y = k = 1).
    """
    exceptional = is_exceptional(rec)
    with warnings.catch_warnings():
        if exceptional:
            warnings.simplefilter("ignore", UnprovenInvariantWarning)
        h11 = cy_h11(rec)
        H3 = cy_H3(rec)
        c2H = cy_c2H(rec)
        e = cy_euler(rec)
        h12 = cy_h12(rec)
        eS = euler_branch_surface(rec)

    if e != 2 * (h11 - h12):
        raise InputError(
            f"{rec.label}: e = {e} but 2(h11 - h12) = {2 * (h11 - h12)}; "
            "the h12 formula needs h11 = 1"
        )
    if c2H != 2 * rec.K3 + eS:
        raise ConsistencyError(f"{rec.label}: c2H = {c2H} but 2K^3 + e(S') = {2 * rec.K3 + eS}")

    caveats: tuple[str, ...] = ()
    if exceptional:
        warnings.warn(f"{rec.label}: {_CAVEAT}", UnprovenInvariantWarning, stacklevel=2)
        caveats = (_CAVEAT,)
    return CYInvariants(h11=h11, h12=h12, H3=H3, c2H=c2H, e=e, caveats=caveats)


def exclude_l2(rec: FanoRecord) -> L2Verdict:
    h3_ok = (rec.minus_K3 / 4).denominator == 1
    chi_ok = ((rec.minus_K3 - rec.N) / 8).denominator == 1
    verdict = Verdict.AMBIGUOUS if (h3_ok and chi_ok) else Verdict.FORCED_L1
    return L2Verdict(verdict, h3_ok, chi_ok)
