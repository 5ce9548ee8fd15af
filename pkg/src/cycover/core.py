"""Exact rationals and the record types shared by every other module.

Rationals are plain :class:`fractions.Fraction` values; this module only adds
the constructors and parsing rules the catalog needs (``"7.5"`` and ``"15/2"``
both mean fifteen halves).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "CYCoverError",
    "InputError",
    "NonIntegralError",
    "ConsistencyError",
    "Rational",
    "rational",
    "parse_rational",
    "format_rational",
    "as_integer",
    "FanoRecord",
    "CYInvariants",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str, float]

MAX_DECIMAL_DIGITS = 3

_DECIMAL_RE = re.compile(r"^[+-]?\d+(\.\d+)?$")
_FRACTION_RE = re.compile(r"^[+-]?\d+\s*/\s*[+-]?\d+$")


class CYCoverError(Exception):
    """Base class for errors raised by this package."""


class InputError(CYCoverError, ValueError):
    """Inputs are malformed or mutually inconsistent."""


class NonIntegralError(InputError, ArithmeticError):
    """A quantity that must be an integer came out fractional."""


class ConsistencyError(CYCoverError, AssertionError):
    """An internal identity failed; this points at a bug, not at the inputs."""


def rational(num: int, den: int = 1) -> Fraction:
    """Build ``num/den`` in lowest terms with a positive denominator.

    >>> rational(-4, -8)
    Fraction(1, 2)
    """
    if isinstance(num, bool) or isinstance(den, bool):
        raise TypeError("rational() takes integers, not booleans")
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError(f"rational() takes integers, got {num!r}, {den!r}")
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/0")
    return Fraction(num, den)


def parse_rational(value: RationalLike) -> Fraction:
    """Parse ``6``, ``"7.5"``, ``"15/2"`` or a Fraction into an exact rational.

    Decimal strings may carry at most three fractional digits. Floats go
    through their shortest ``repr`` so ``7.5`` parses as ``15/2``.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    if not isinstance(value, str):
        raise InputError(f"not a rational number: {value!r}")
    text = value.strip()
    if _FRACTION_RE.match(text):
        num, den = (int(part) for part in text.split("/"))
        if den == 0:
            raise InputError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    if _DECIMAL_RE.match(text):
        if "." in text and len(text.split(".")[1]) > MAX_DECIMAL_DIGITS:
            raise InputError(
                f"{value!r} has more than {MAX_DECIMAL_DIGITS} fractional digits"
            )
        return Fraction(text)
    raise InputError(f"not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a rational as a finite decimal when possible, else as ``p/q``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = value * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def as_integer(value: Fraction | int, what: str = "value") -> int:
    """Return ``value`` as an int, raising NonIntegralError if it is fractional."""
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegralError(f"{what} = {value} is not an integer")
    return value.numerator


def _check_int(name: str, value: object, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{name} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class FanoRecord:
    """Input datum of a Q-Fano 3-fold with only 1/2(1,1,1) points.

    ``minus_K3`` is the anticanonical degree, which for Gorenstein index two is
    a half-integer. ``h2_Y`` and ``k`` default to one, the value for every
    Picard-rank-one example in the bundled table.
    """

    fano_ids: tuple[str, ...]
    minus_K3: Fraction
    N: int
    e_Y: int
    h2_Y: int = 1
    k: int = 1

    def __post_init__(self) -> None:
        ids = self.fano_ids
        if isinstance(ids, str):
            ids = (ids,)
        ids = tuple(str(i).strip() for i in ids)
        if not ids or any(not i for i in ids):
            raise InputError(f"fano_ids must be non-empty strings, got {self.fano_ids!r}")
        object.__setattr__(self, "fano_ids", ids)

        minus_K3 = parse_rational(self.minus_K3)
        if minus_K3 <= 0:
            raise InputError(f"minus_K3 must be positive, got {minus_K3}")
        if (2 * minus_K3).denominator != 1:
            raise InputError(f"2*minus_K3 must be an integer, got minus_K3 = {minus_K3}")
        object.__setattr__(self, "minus_K3", minus_K3)

        _check_int("N", self.N, 0)
        _check_int("e_Y", self.e_Y)
        _check_int("h2_Y", self.h2_Y, 0)
        _check_int("k", self.k, 0)
        if self.k > self.h2_Y:
            raise InputError(f"k = {self.k} exceeds h2_Y = {self.h2_Y}")

    @property
    def K3(self) -> Fraction:
        """The canonical degree K_Y^3, i.e. ``-minus_K3``."""
        return -self.minus_K3

    @property
    def label(self) -> str:
        return ", ".join(self.fano_ids)


@dataclass(frozen=True)
class CYInvariants:
    """Hodge numbers, degree, second Chern number and Euler number of X.

    ``caveats`` is empty for fully proven rows. It carries a note for the
    one input, ``(-K^3, N) = (4, 4)``, where only h11 and e are established.
    """

    h11: int
    h12: int
    H3: int
    c2H: int
    e: int
    caveats: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        for name in ("h11", "h12", "H3", "c2H", "e"):
            _check_int(name, getattr(self, name))
        if self.e != 2 * (self.h11 - self.h12):
            raise ConsistencyError(
                f"e = {self.e} but 2(h11 - h12) = {2 * (self.h11 - self.h12)}"
            )
        if self.H3 <= 0:
            raise ConsistencyError(f"H3 must be positive, got {self.H3}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.H3, self.c2H, self.e)

    @property
    def proven(self) -> bool:
        return not self.caveats


def split_ids(text: str | Iterable[str]) -> tuple[str, ...]:
    """Split ``"1.2, 1.3"`` into ``("1.2", "1.3")``; lists pass through."""
    if isinstance(text, str):
        parts = text.split(",")
    else:
        parts = list(text)
    return tuple(p.strip() for p in parts if str(p).strip())
