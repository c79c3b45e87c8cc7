from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import ceil_sqrt_scan, decompose_scan
from wegner.params import HexParams, ceil_isqrt, decompose, p0_of_n, p0_of_params, recompose


@pytest.mark.parametrize(
    "n, expected",
    [(1541551, (717, 2, 0)), (1, (1, 0, 0)), (121, (6, 5, 0)), (7, (2, 0, 0)), (6, (1, 5, 0))],
)
def test_decompose_examples(n, expected):
    p = decompose(n)
    assert (p.a, p.b, p.c) == expected


def test_decompose_matches_linear_scan():
    assert decompose_scan(121) == (6, 5, 0)
    for n in range(1, 3000):
        p = decompose(n)
        assert (p.a, p.b, p.c) == decompose_scan(n)


@pytest.mark.parametrize("bad", [0, -1, -1541551])
def test_decompose_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        decompose(bad)


@pytest.mark.parametrize(
    "triple, n", [((717, 2, 0), 1541551), ((1, 0, 0), 1), ((2, 0, 0), 7)]
)
def test_recompose_examples(triple, n):
    assert recompose(HexParams(*triple)) == n


@pytest.mark.parametrize("triple", [(0, 0, 0), (2, 6, 0), (2, -1, 0), (3, 1, 3), (1, 0, 1)])
def test_invalid_params_rejected(triple):
    with pytest.raises(ValueError):
        HexParams(*triple)


@pytest.mark.parametrize("triple, p0", [((717, 2, 0), 4299), ((1, 0, 0), 0), ((6, 5, 0), 36)])
def test_p0_of_params_examples(triple, p0):
    assert p0_of_params(HexParams(*triple)) == p0


@pytest.mark.parametrize("n, p0", [(1541551, 4299), (2, 2), (1, 0)])
def test_p0_of_n_examples(n, p0):
    assert p0_of_n(n) == p0


def test_p0_ceiling_boundary_at_counterexample():
    x = 12 * 1541551 - 3
    assert 4301**2 < x <= 4302**2
    assert ceil_isqrt(x) == 4302 == ceil_sqrt_scan(x)


def test_p0_of_n_rejects_zero():
    with pytest.raises(ValueError):
        p0_of_n(0)


def test_p0_formulas_agree_small_range():
    for n in range(1, 20000):
        assert p0_of_n(n) == p0_of_params(decompose(n))


@given(st.integers(min_value=1, max_value=10**40))
def test_roundtrip_and_maximality(n):
    p = decompose(n)
    assert recompose(p) == n
    assert recompose(HexParams(p.a + 1, 0, 0)) > n
    if p.b < 5:
        assert recompose(HexParams(p.a, p.b + 1, 0)) > n
    assert p0_of_n(n) == p0_of_params(p)


@given(st.integers(min_value=1, max_value=10**30))
def test_decompose_monotone(n):
    assert decompose(n).a <= decompose(n + 1).a


@given(st.integers(min_value=0, max_value=10**60))
def test_ceil_isqrt_brackets(x):
    r = isqrt(x)
    assert r * r <= x < (r + 1) ** 2
    c = ceil_isqrt(x)
    assert (c - 1) ** 2 < x <= c * c or (x == 0 and c == 0)


def test_ceil_isqrt_small_matches_scan():
    for x in range(0, 2000):
        assert ceil_isqrt(x) == ceil_sqrt_scan(x)
