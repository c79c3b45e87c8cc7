import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from wegner.criteria import check_boeroeczky_ruzsa
from wegner.params import HexParams, decompose, hex_number, p0_of_n
from wegner.search import (
    BoundarySeq,
    bounds_ok,
    canonicalize,
    complete_seq,
    cross_validate,
    enumerate_exceptional,
    find_extremal,
    n_of_seq,
    naive_solution_table,
    perimeter_of_seq,
    seq_from_cuts,
)

WITNESS = BoundarySeq(702, 717, 714, 741, 678, 753)
COUNTEREXAMPLE = HexParams(717, 2, 0)

sides = st.integers(min_value=1, max_value=60)


@st.composite
def boundary_seqs(draw, top=60):
    p1, p2, p3, p4 = (draw(st.integers(min_value=1, max_value=top)) for _ in range(4))
    seq = complete_seq(p1, p2, p3, p4)
    assume(seq is not None)
    return seq


@pytest.mark.parametrize(
    "p, n", [((702, 717, 714, 741), 1541551), ((1, 1, 1, 1), 1), ((2, 2, 2, 2), 7)]
)
def test_n_of_seq_examples(p, n):
    assert n_of_seq(*p) == n


@pytest.mark.parametrize(
    "p, per", [((702, 717, 714, 741), 4299), ((1, 1, 1, 1), 0), ((2, 2, 2, 2), 6)]
)
def test_perimeter_examples(p, per):
    assert perimeter_of_seq(*p) == per


def test_witness_perimeter_matches_p0():
    assert perimeter_of_seq(702, 717, 714, 741) == p0_of_n(1541551)


def test_bounds_ok_examples():
    assert bounds_ok(WITNESS, COUNTEREXAMPLE)
    assert bounds_ok(BoundarySeq(1434, 1000, 1000, 1000, 1434, 566), COUNTEREXAMPLE)
    assert not bounds_ok(BoundarySeq(1435, 1000, 1000, 1000, 1435, 565), COUNTEREXAMPLE)
    assert not bounds_ok(BoundarySeq(357, 700, 700, 700, 357, 1043), COUNTEREXAMPLE)
    assert bounds_ok(BoundarySeq(358, 700, 700, 700, 358, 1042), COUNTEREXAMPLE)


def test_bounds_ok_rejects_regular():
    with pytest.raises(ValueError):
        bounds_ok(BoundarySeq(2, 2, 2, 2, 2, 2), HexParams(2, 0, 0))


@pytest.mark.parametrize(
    "p, expected",
    [
        ((702, 717, 714, 741), (702, 717, 714, 741, 678, 753)),
        ((2, 2, 2, 2), (2, 2, 2, 2, 2, 2)),
        ((1, 1, 5, 5), None),
    ],
)
def test_complete_seq_examples(p, expected):
    seq = complete_seq(*p)
    assert (None if seq is None else tuple(seq)) == expected


def test_boundary_seq_validates():
    with pytest.raises(ValueError):
        BoundarySeq(2, 2, 2, 2, 2, 3)
    with pytest.raises(ValueError):
        BoundarySeq(1, 1, 5, 5, -3, 9)


@pytest.mark.parametrize(
    "seq, canon",
    [
        ((2, 2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2)),
        ((3, 2, 2, 3, 2, 2), (2, 2, 3, 2, 2, 3)),
        ((702, 717, 714, 741, 678, 753), (678, 753, 702, 717, 714, 741)),
    ],
)
def test_canonicalize_examples(seq, canon):
    assert tuple(canonicalize(BoundarySeq(*seq))) == canon


@given(boundary_seqs(), st.integers(min_value=0, max_value=11))
def test_canonicalize_rotation_invariant(seq, j):
    c = canonicalize(seq)
    assert canonicalize(c) == c
    assert canonicalize(seq.rotate(j)) == c


@given(boundary_seqs(), st.integers(min_value=0, max_value=5))
def test_rotation_preserves_count_and_perimeter(seq, j):
    r = seq.rotate(j)
    assert n_of_seq(*r[:4]) == n_of_seq(*seq[:4])
    assert perimeter_of_seq(*r[:4]) == perimeter_of_seq(*seq[:4]) == sum(seq) - 6


@given(boundary_seqs())
def test_corner_cut_parametrization(seq):
    p1, p2, p3, p4, p5, p6 = seq
    big_t, t_a, t_b, t_c = p1 + p2 + p6 - 3, p6 - 1, p2 - 1, p4 - 1
    assert seq_from_cuts(big_t, t_a, t_b, t_c) == seq
    tri = lambda t: t * (t + 1) // 2
    assert n_of_seq(p1, p2, p3, p4) == tri(big_t + 1) - tri(t_a) - tri(t_b) - tri(t_c)
    assert perimeter_of_seq(p1, p2, p3, p4) == 3 * big_t - t_a - t_b - t_c


def test_find_extremal_counterexample():
    rep = find_extremal(1541551)
    assert rep.params == COUNTEREXAMPLE and rep.p0 == 4299
    assert not rep.exceptional
    assert canonicalize(WITNESS) in rep.solutions
    for s in rep.solutions:
        assert n_of_seq(*s[:4]) == 1541551
        assert perimeter_of_seq(*s[:4]) == 4299
        assert bounds_ok(s, rep.params)


def test_find_extremal_121_exceptional():
    rep = find_extremal(121)
    assert rep.exceptional and not rep.solutions
    assert check_boeroeczky_ruzsa(121) is not None


def test_find_extremal_regular_fast_path():
    rep = find_extremal(7)
    assert rep.solutions == frozenset({BoundarySeq(2, 2, 2, 2, 2, 2)})
    assert not rep.exceptional


@given(st.integers(min_value=1, max_value=10**6))
def test_regular_hexagon_sequence(a):
    assert n_of_seq(a, a, a, a) == 3 * a * a - 3 * a + 1 == hex_number(a)
    assert perimeter_of_seq(a, a, a, a) == 6 * a - 6 == p0_of_n(hex_number(a))


def test_side_window_misses_real_packings():
    # n = 16 is not exceptional, but its only extremal hexagons need a side of 4 > 2a - c = 3
    rep = find_extremal(16)
    assert not rep.exceptional and check_boeroeczky_ruzsa(16) is None
    assert canonicalize(BoundarySeq(3, 3, 2, 4, 2, 3)) in rep.solutions
    assert find_extremal(16, side_bounds=True).solutions == frozenset()


@given(st.integers(min_value=1, max_value=400000))
def test_soundness(n):
    rep = find_extremal(n)
    for s in rep.solutions:
        assert n_of_seq(*s[:4]) == n
        assert perimeter_of_seq(*s[:4]) == p0_of_n(n)
        assert s == canonicalize(s)


def test_naive_agrees_small():
    table = naive_solution_table(300)
    for n in range(1, 301):
        assert table[n] == find_extremal(n).solutions
    bounded = naive_solution_table(300, side_bounds=True)
    for n in range(1, 301):
        assert bounded[n] == find_extremal(n, side_bounds=True).solutions


def test_enumerate_examples():
    naive = naive_solution_table(200)
    brute = [n for n in range(1, 201) if not naive[n] and not decompose(n).regular]
    assert brute == [121, 163]
    assert enumerate_exceptional(200, "boeroeczky_ruzsa") == brute
    assert enumerate_exceptional(200, "oracle") == brute
    assert enumerate_exceptional(100, "oracle") == []


def test_enumerate_rejects_unknown():
    with pytest.raises(ValueError):
        enumerate_exceptional(10, "nope")


def test_cross_validate_small():
    assert cross_validate(100).discrepancies == ()
    cv = cross_validate(121)
    assert cv.discrepancies == () and cv.corrected_mismatches == ()


@pytest.mark.parametrize("jobs", [1, 3])
def test_enumerate_jobs_deterministic(jobs):
    assert enumerate_exceptional(5000, "corrected", jobs=jobs) == enumerate_exceptional(5000, "boeroeczky_ruzsa")
