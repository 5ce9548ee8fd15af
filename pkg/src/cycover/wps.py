"""Weighted projective spaces: well-formedness, coordinate-point singularities, covers.

Only the coordinate points P_i are typed. Positive-dimensional singular strata
(a proper subset of two or more weights sharing a factor) are reported but not
classified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .core import InputError

__all__ = [
    "WeightedProjectiveSpace",
    "QuotientSingularityType",
    "SMOOTH",
    "HypersurfaceSpec",
    "CoverReport",
    "parse_weights",
    "well_formed",
    "singular_strata",
    "coordinate_singularities",
    "is_half_one_type",
    "adjunction_degree",
    "double_cover_check",
]


def _gcd(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


@dataclass(frozen=True)
class WeightedProjectiveSpace:
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        weights = tuple(self.weights)
        if len(weights) < 2:
            raise InputError(f"need at least two weights, got {weights}")
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise InputError(f"weights must be positive integers, got {weights}")
        object.__setattr__(self, "weights", weights)

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    def __str__(self) -> str:
        return "P(" + ",".join(map(str, self.weights)) + ")"


@dataclass(frozen=True)
class QuotientSingularityType:
    """The cyclic quotient 1/r(a_1, ..., a_n), residues reduced mod r."""

    r: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 2:
            raise InputError(f"order r must be an integer >= 2, got {self.r!r}")
        object.__setattr__(self, "residues", tuple(a % self.r for a in self.residues))

    @property
    def is_isolated(self) -> bool:
        return all(gcd(a, self.r) == 1 for a in self.residues)

    def __str__(self) -> str:
        return f"1/{self.r}(" + ",".join(map(str, self.residues)) + ")"


class _Smooth(enum.Enum):
    SMOOTH = "smooth"

    def __str__(self) -> str:
        return self.value


SMOOTH = _Smooth.SMOOTH


@dataclass(frozen=True)
class HypersurfaceSpec:
    ambient: WeightedProjectiveSpace
    degree: int

    def __post_init__(self) -> None:
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise InputError(f"degree must be a positive integer, got {self.degree!r}")


@dataclass(frozen=True)
class CoverReport:
    base: WeightedProjectiveSpace
    branch_degree: int
    degree_matches: bool
    half_type_points: tuple[tuple[int, QuotientSingularityType], ...]
    other_points: tuple[tuple[int, QuotientSingularityType], ...]
    strata: tuple[tuple[int, ...], ...]

    @property
    def verdict(self) -> bool:
        return self.degree_matches and not self.other_points

    def lines(self) -> list[str]:
        expected = 2 * sum(self.base.weights)
        out = [
            f"branch degree {self.branch_degree} vs 2*sum(weights) = {expected}: "
            + ("match" if self.degree_matches else "MISMATCH"),
        ]
        for i, t in self.half_type_points:
            out.append(f"  point {i}: {t} (allowed)")
        for i, t in self.other_points:
            out.append(f"  point {i}: {t} (not of type 1/2(1,...,1))")
        for s in self.strata:
            out.append(f"  singular stratum on coordinates {list(s)} (gcd {_gcd(self.base.weights[i] for i in s)})")
        out.append(f"verdict: {'true' if self.verdict else 'false'}")
        return out


def parse_weights(text: str | Sequence[int]) -> WeightedProjectiveSpace:
    """Read ``"1,1,1,2"`` (or a sequence of ints) into a weighted projective space."""
    if isinstance(text, str):
        try:
            weights = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise InputError(f"malformed weight list {text!r}") from None
    else:
        weights = tuple(text)
    return WeightedProjectiveSpace(weights)


def well_formed(P: WeightedProjectiveSpace) -> bool:
    """True iff every n of the n + 1 weights are coprime."""
    return all(_gcd(sub) == 1 for sub in combinations(P.weights, P.dim))


def singular_strata(P: WeightedProjectiveSpace) -> list[tuple[int, ...]]:
    """Maximal index sets of size 2..n whose weights share a factor."""
    n = len(P.weights)
    found: list[tuple[int, ...]] = []
    for size in range(n - 1, 1, -1):
        for idx in combinations(range(n), size):
            if _gcd(P.weights[i] for i in idx) > 1 and not any(set(idx) <= set(f) for f in found):
                found.append(idx)
    return sorted(found)


def coordinate_singularities(
    P: WeightedProjectiveSpace,
) -> list[tuple[int, QuotientSingularityType | _Smooth]]:
    if not well_formed(P):
        raise InputError(f"{P} is not well-formed")
    out: list[tuple[int, QuotientSingularityType | _Smooth]] = []
    for i, w in enumerate(P.weights):
        if w == 1:
            out.append((i, SMOOTH))
        else:
            others = P.weights[:i] + P.weights[i + 1 :]
            out.append((i, QuotientSingularityType(w, others)))
    return out


def is_half_one_type(t: QuotientSingularityType) -> bool:
    return t.r == 2 and all(a == 1 for a in t.residues)


def adjunction_degree(h: HypersurfaceSpec) -> int:
    """degree - sum(weights); zero means K of the hypersurface is trivial."""
    return h.degree - sum(h.ambient.weights)


def double_cover_check(base: WeightedProjectiveSpace, branch_degree: int) -> CoverReport:
    """Can a double cover branched in degree ``branch_degree`` plus the 1/2 points be Calabi-Yau?"""
    points = [(i, t) for i, t in coordinate_singularities(base) if t is not SMOOTH]
    return CoverReport(
        base=base,
        branch_degree=branch_degree,
        degree_matches=branch_degree == 2 * sum(base.weights),
        half_type_points=tuple((i, t) for i, t in points if is_half_one_type(t)),
        other_points=tuple((i, t) for i, t in points if not is_half_one_type(t)),
        strata=tuple(singular_strata(base)),
    )
