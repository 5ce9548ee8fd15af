import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import REFERENCE_ROWS, reference_record
from cycover.core import CYInvariants, InputError, NonIntegralError
from cycover.hilbert import (
    SCAN_WINDOW,
    HilbertPolynomial,
    chi,
    embedding_dimension,
    group_by_hilbert,
    hilbert_polynomial,
)
from cycover.invariants import compute_all


def inv(H3, c2H, e=None, h11=1):
    if e is None:
        e = -100
    return CYInvariants(h11=h11, h12=h11 - e // 2, H3=H3, c2H=c2H, e=e)


def rr_oracle(H3, c2H, n):
    # Independent route: evaluate H3 n^3 / 6 + c2H n / 12 over a common denominator.
    num = 2 * H3 * n**3 + c2H * n
    assert num % 12 == 0
    return num // 12


@pytest.mark.parametrize(
    "H3, c2H, a3, a1",
    [(14, 56, Fraction(7, 3), Fraction(14, 3)), (12, 48, 2, 4), (6, 0, 1, 0)],
)
def test_hilbert_polynomial_coefficients(H3, c2H, a3, a1):
    p = hilbert_polynomial(inv(H3, c2H))
    assert (p.a3, p.a1) == (a3, a1)


def test_chi_examples():
    p = HilbertPolynomial(Fraction(7, 3), Fraction(14, 3))
    assert chi(p, 8) == (7 * 512 + 14 * 8) // 3 == 1232
    assert chi(p, 0) == 0
    assert chi(HilbertPolynomial(2, 4), -1) == -6


@pytest.mark.parametrize("H3, c2H, expected", [(14, 56, 1231), (12, 48, 1055), (21, 66, 1835)])
def test_embedding_dimension(H3, c2H, expected):
    assert embedding_dimension(inv(H3, c2H)) == expected
    assert expected == rr_oracle(H3, c2H, 8) - 1


def test_scan_rejects_corrupted_invariants():
    # H3 = 7, c2H = 0 gives chi(O(H)) = 7/6.
    with pytest.raises(NonIntegralError):
        HilbertPolynomial(Fraction(7, 6), 0)
    with pytest.raises(InputError):
        HilbertPolynomial(0, 1)


def test_chi_nonintegral_is_error():
    p = HilbertPolynomial(1, 0)
    object.__setattr__(p, "a1", Fraction(1, 2))  # bypass the scan
    with pytest.raises(NonIntegralError):
        chi(p, 1)


@pytest.mark.parametrize("row", REFERENCE_ROWS, ids=lambda r: f"CY{r[0]}")
def test_reference_rows_integral_and_odd(row):
    _, H3, c2H, *_ = row
    p = hilbert_polynomial(compute_all(reference_record(row)))
    for n in SCAN_WINDOW:
        assert chi(p, n) == rr_oracle(H3, c2H, n)
    for n in range(1, 21):
        assert chi(p, -n) == -chi(p, n)


def test_group_reference_rows():
    records = [(r[0], compute_all(reference_record(r))) for r in REFERENCE_ROWS]
    groups = group_by_hilbert(records)
    nontrivial = [g for g in groups if len(g) > 1]
    assert nontrivial == [[2, 3], [4, 5], [9, 10], [12, 13], [16, 17]]
    assert sorted(g[0] for g in groups if len(g) == 1) == [1, 6, 7, 8, 11, 14, 15, 18]


def test_group_single_record():
    assert group_by_hilbert([("a", inv(14, 56))]) == [["a"]]


def test_group_ignores_euler_number():
    groups = group_by_hilbert([("x", inv(14, 56, -96)), ("y", inv(14, 56, -100))])
    assert groups == [["x", "y"]]


def test_group_is_permutation_invariant():
    records = [(r[0], compute_all(reference_record(r))) for r in REFERENCE_ROWS]
    expected = group_by_hilbert(records)
    rng = random.Random(7)
    for _ in range(20):
        shuffled = records[:]
        rng.shuffle(shuffled)
        assert group_by_hilbert(shuffled) == expected


def test_grouping_refines_triples():
    records = [(r[0], compute_all(reference_record(r))) for r in REFERENCE_ROWS]
    records.append((99, compute_all(reference_record(REFERENCE_ROWS[0]))))
    groups = group_by_hilbert(records)
    where = {i: k for k, g in enumerate(groups) for i in g}
    assert where[1] == where[99]


@given(st.integers(1, 60), st.integers(0, 60))
def test_equal_polynomials_iff_equal_pair(a, b):
    H3, c2H = 6 * a, 12 * b
    p = hilbert_polynomial(inv(H3, c2H))
    q = hilbert_polynomial(inv(H3, c2H, e=-2))
    assert p == q
    assert p != hilbert_polynomial(inv(H3 + 6, c2H))
