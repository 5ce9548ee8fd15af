"""Divisor-class arithmetic replaying the double-cover construction in odd dimension n.

Classes live in one of three named bases:

* ``TILDE_Y``: the blow-up of Y at a 1/2(1^[n]) point, spanned by ``fK``
  (pullback of K_Y) and ``E`` (exceptional P^{n-1}).
* ``TILDE_X``: the double cover of the blow-up, spanned by ``pfK`` and ``F``.
* ``EXCEPTIONAL_F``: Pic(F) = Pic(P^{n-1}), spanned by the hyperplane ``H``.

Mixing bases is a TypeError. The pullback along the cover sends ``E`` to
``2F`` because E lies in the branch locus.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import ConsistencyError, InputError

__all__ = [
    "Basis",
    "DivisorExpr",
    "pullback",
    "blowup_canonical",
    "branch_bundle",
    "cover_canonical",
    "contracted_canonical",
    "f_normal_class",
    "CoverStep",
    "cover_transcript",
]


class Basis(enum.Enum):
    TILDE_Y = ("fK", "E")
    TILDE_X = ("pfK", "F")
    EXCEPTIONAL_F = ("H",)

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.value


@dataclass(frozen=True)
class DivisorExpr:
    """A rational linear combination of basis symbols, zero terms dropped."""

    basis: Basis
    terms: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[str, Fraction] = {}
        for sym, coeff in self.terms:
            if sym not in self.basis.symbols:
                raise ValueError(f"{sym!r} is not a symbol of {self.basis.name}")
            merged[sym] = merged.get(sym, Fraction(0)) + Fraction(coeff)
        canonical = tuple(
            (sym, merged[sym]) for sym in self.basis.symbols if merged.get(sym, 0) != 0
        )
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def of(cls, basis: Basis, coefficients: Mapping[str, Fraction | int] | None = None, **kw) -> DivisorExpr:
        coeffs = dict(coefficients or {}, **kw)
        return cls(basis, tuple(coeffs.items()))

    @classmethod
    def zero(cls, basis: Basis) -> DivisorExpr:
        return cls(basis)

    def coefficient(self, sym: str) -> Fraction:
        if sym not in self.basis.symbols:
            raise ValueError(f"{sym!r} is not a symbol of {self.basis.name}")
        return dict(self.terms).get(sym, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _same_basis(self, other: object) -> DivisorExpr:
        if not isinstance(other, DivisorExpr):
            return NotImplemented
        if other.basis is not self.basis:
            raise TypeError(f"cannot combine {self.basis.name} and {other.basis.name} classes")
        return other

    def __add__(self, other: DivisorExpr) -> DivisorExpr:
        other = self._same_basis(other)
        if other is NotImplemented:
            return NotImplemented
        return DivisorExpr(self.basis, self.terms + other.terms)

    def __neg__(self) -> DivisorExpr:
        return DivisorExpr(self.basis, tuple((s, -c) for s, c in self.terms))

    def __sub__(self, other: DivisorExpr) -> DivisorExpr:
        other = self._same_basis(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Fraction | int) -> DivisorExpr:
        if not isinstance(scalar, (int, Fraction)) or isinstance(scalar, bool):
            return NotImplemented
        return DivisorExpr(self.basis, tuple((s, c * scalar) for s, c in self.terms))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Fraction | int) -> DivisorExpr:
        if not isinstance(scalar, (int, Fraction)) or isinstance(scalar, bool):
            return NotImplemented
        return self * (1 / Fraction(scalar))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for sym, coeff in self.terms:
            mag = abs(coeff)
            if mag == 1:
                body = sym
            elif mag.denominator == 1:
                body = f"{mag}{sym}"
            else:
                body = f"({mag}){sym}"
            if not out:
                out.append(f"-{body}" if coeff < 0 else body)
            else:
                out.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(out)


_PULLBACK = {"fK": ("pfK", Fraction(1)), "E": ("F", Fraction(2))}


def pullback(expr: DivisorExpr) -> DivisorExpr:
    """Pull a class on the blow-up back to the double cover."""
    if expr.basis is not Basis.TILDE_Y:
        raise TypeError(f"pullback is defined on TILDE_Y classes, got {expr.basis.name}")
    terms = tuple((_PULLBACK[s][0], _PULLBACK[s][1] * c) for s, c in expr.terms)
    return DivisorExpr(Basis.TILDE_X, terms)


def _half_dim(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"dimension must be an integer, got {n!r}")
    if n < 3 or n % 2 == 0:
        raise InputError(f"dimension must be odd and >= 3, got {n}")
    return (n - 1) // 2


def blowup_canonical(n: int) -> DivisorExpr:
    """K of the blow-up: fK + ((n - 2)/2) E."""
    _half_dim(n)
    two_K = DivisorExpr.of(Basis.TILDE_Y, fK=2, E=n - 2)
    return two_K / 2


def branch_bundle(n: int) -> DivisorExpr:
    """D = -K + mE with n = 2m + 1; checks 2D = -2 fK + E."""
    m = _half_dim(n)
    D = -blowup_canonical(n) + DivisorExpr.of(Basis.TILDE_Y, E=m)
    expected = DivisorExpr.of(Basis.TILDE_Y, fK=-2, E=1)
    if 2 * D != expected:
        raise ConsistencyError(f"n = {n}: 2D = {2 * D}, expected {expected}")
    return D


def cover_canonical(n: int) -> DivisorExpr:
    """K of the double cover: pullback of K + D = mE, i.e. 2mF."""
    m = _half_dim(n)
    ramified = blowup_canonical(n) + branch_bundle(n)
    if ramified != DivisorExpr.of(Basis.TILDE_Y, E=m):
        raise ConsistencyError(f"n = {n}: K + D = {ramified}, expected {m}E")
    return pullback(ramified)


def contracted_canonical(n: int) -> DivisorExpr:
    """g^*K_X = K - (n - 1)F after contracting F; must vanish."""
    _half_dim(n)
    result = cover_canonical(n) - DivisorExpr.of(Basis.TILDE_X, F=n - 1)
    if not result.is_zero():
        raise ConsistencyError(f"n = {n}: g^*K_X = {result}, expected 0")
    return result


def f_normal_class(n: int) -> DivisorExpr:
    """F|_F in Pic(F), solved from K_F = -nH = (K + F)|_F."""
    _half_dim(n)
    K_F = DivisorExpr.of(Basis.EXCEPTIONAL_F, H=-n)
    # (K + F)|_F = (2m + 1) F|_F since K = 2mF; F itself restricts to F|_F.
    multiple = cover_canonical(n).coefficient("F") + 1
    if multiple != n:
        raise ConsistencyError(f"n = {n}: (K + F)|_F = {multiple} F|_F, expected {n} F|_F")
    return K_F / multiple


@dataclass(frozen=True)
class CoverStep:
    label: str
    expr: DivisorExpr
    expected: DivisorExpr

    @property
    def ok(self) -> bool:
        return self.expr == self.expected

    def __str__(self) -> str:
        mark = "ok" if self.ok else f"FAILED (expected {self.expected})"
        return f"{self.label} = {self.expr}  [{mark}]"


def cover_transcript(n: int) -> list[CoverStep]:
    """Every displayed relation of the construction for dimension n."""
    m = _half_dim(n)
    Y, X, P = Basis.TILDE_Y, Basis.TILDE_X, Basis.EXCEPTIONAL_F
    K_tY = blowup_canonical(n)
    D = branch_bundle(n)
    return [
        CoverStep("K_~Y", K_tY, DivisorExpr.of(Y, fK=1, E=Fraction(n - 2, 2))),
        CoverStep("D = -K_~Y + mE", D, DivisorExpr.of(Y, fK=-1, E=Fraction(1, 2))),
        CoverStep("2D", 2 * D, DivisorExpr.of(Y, fK=-2, E=1)),
        CoverStep("K_~Y + D", K_tY + D, DivisorExpr.of(Y, E=m)),
        CoverStep("K_~X", cover_canonical(n), DivisorExpr.of(X, F=n - 1)),
        CoverStep("F|_F", f_normal_class(n), DivisorExpr.of(P, H=-1)),
        CoverStep("g*K_X", contracted_canonical(n), DivisorExpr.zero(X)),
    ]
