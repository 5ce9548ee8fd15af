from __future__ import annotations

from fractions import Fraction

import pytest

from cycover.catalog import bundled_fano_table
from cycover.core import FanoRecord

# The eighteen reference rows as printed: (cy#, H3, c2H, e, fano ids, -K^3, N, e(Y)).
REFERENCE_ROWS = [
    (1, 12, 48, -68, ("4.2",), Fraction(6), 4, -2),
    (2, 14, 56, -96, ("1.1",), Fraction(7), 2, -12),
    (3, 14, 56, -100, ("4.4",), Fraction(7), 2, -14),
    (4, 15, 54, -76, ("1.2", "1.3"), Fraction(15, 2), 3, -2),
    (5, 15, 54, -84, ("4.5",), Fraction(15, 2), 3, -6),
    (6, 16, 52, -72, ("4.6",), Fraction(8), 4, 0),
    (7, 17, 62, -108, ("1.4",), Fraction(17, 2), 1, -14),
    (8, 17, 50, -64, ("4.7",), Fraction(17, 2), 5, 4),
    (9, 18, 60, -84, ("1.5",), Fraction(9), 2, -2),
    (10, 18, 60, -92, ("1.6",), Fraction(9), 2, -6),
    (11, 19, 58, -76, ("1.7", "1.8"), Fraction(19, 2), 3, 2),
    (12, 21, 66, -100, ("1.9",), Fraction(21, 2), 1, -6),
    (13, 21, 66, -104, ("1.10",), Fraction(21, 2), 1, -8),
    (14, 22, 64, -92, ("1.11",), Fraction(11), 2, -2),
    (15, 25, 70, -100, ("1.12",), Fraction(25, 2), 1, -2),
    (16, 29, 74, -104, ("1.13",), Fraction(29, 2), 1, 0),
    (17, 29, 74, -96, ("4.8",), Fraction(29, 2), 1, 4),
    (18, 30, 72, -96, ("1.14",), Fraction(15), 2, 4),
]


def reference_record(row) -> FanoRecord:
    _, _, _, _, ids, mk3, n, e_y = row
    return FanoRecord(ids, mk3, n, e_y)


@pytest.fixture(scope="session")
def bundled_entries():
    return bundled_fano_table()


@pytest.fixture(params=REFERENCE_ROWS, ids=lambda r: f"CY{r[0]}")
def reference_row(request):
    return request.param
