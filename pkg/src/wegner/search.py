"""Exhaustive search for extremal boundary sequences.

An extremal Groemer packing of n discs exists iff there is a lattice hexagon
with boundary sequence p1..p6 (p5 = p1+p2-p4, p6 = p3+p4-p1, all >= 1) and

    n  == (p1+p2-1)(p3+p4-1) - C(p1,2) - C(p4,2)
    p0 == p1 + 2 p2 + 2 p3 + p4 - 6

``find_extremal`` enumerates such hexagons as triangles with cut corners;
``naive_solution_table`` is a plain quadruple loop kept as an independent check.
The side window (a-1)/2 <= p_i <= 2a - c is available as an optional filter.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Iterable, Iterator, NamedTuple, Optional

import numpy as np

from .criteria import check_boeroeczky_ruzsa, check_corrected, check_wegner_conjecture
from .params import HexParams, decompose, p0_of_n

CRITERIA = ("oracle", "boeroeczky_ruzsa", "corrected", "wegner_conjecture")


class _Sides(NamedTuple):
    p1: int
    p2: int
    p3: int
    p4: int
    p5: int
    p6: int


class BoundarySeq(_Sides):
    """Six boundary counts of a lattice hexagon, validated on construction."""

    __slots__ = ()

    def __new__(cls, p1: int, p2: int, p3: int, p4: int, p5: int, p6: int) -> BoundarySeq:
        if min(p1, p2, p3, p4, p5, p6) < 1:
            raise ValueError(f"boundary counts must be positive: {(p1, p2, p3, p4, p5, p6)}")
        if p5 != p1 + p2 - p4 or p6 != p3 + p4 - p1:
            raise ValueError(f"closure relations violated: {(p1, p2, p3, p4, p5, p6)}")
        return super().__new__(cls, p1, p2, p3, p4, p5, p6)

    def rotate(self, j: int) -> BoundarySeq:
        j %= 6
        return BoundarySeq(*(self[j:] + self[:j]))


@dataclass(frozen=True)
class SearchReport:
    n: int
    params: HexParams
    p0: int
    solutions: frozenset = field(default_factory=frozenset)

    @property
    def exceptional(self) -> bool:
        return not self.solutions and not self.params.regular

    def sorted_solutions(self) -> list[BoundarySeq]:
        return sorted(self.solutions)


def n_of_seq(p1: int, p2: int, p3: int, p4: int) -> int:
    return (p1 + p2 - 1) * (p3 + p4 - 1) - p1 * (p1 - 1) // 2 - p4 * (p4 - 1) // 2


def perimeter_of_seq(p1: int, p2: int, p3: int, p4: int) -> int:
    return p1 + 2 * p2 + 2 * p3 + p4 - 6


def bounds_window(p: HexParams) -> tuple[int, int]:
    """Integer range [lo, hi] of admissible boundary counts, lo >= 1."""
    return max(1, p.a // 2), 2 * p.a - p.c


def bounds_ok(seq: BoundarySeq, p: HexParams) -> bool:
    if p.regular:
        raise ValueError("side bounds only apply when b and c are not both 0")
    hi = 2 * p.a - p.c
    return all(2 * x >= p.a - 1 and x <= hi for x in seq)


def complete_seq(p1: int, p2: int, p3: int, p4: int) -> Optional[BoundarySeq]:
    p5 = p1 + p2 - p4
    p6 = p3 + p4 - p1
    if min(p1, p2, p3, p4, p5, p6) < 1:
        return None
    return BoundarySeq(p1, p2, p3, p4, p5, p6)


def canonicalize(seq: BoundarySeq) -> BoundarySeq:
    """Lexicographically smallest cyclic rotation."""
    return BoundarySeq(*min(seq[j:] + seq[:j] for j in range(6)))


def _split_pair(total: int, squares: int) -> list[tuple[int, int]]:
    """Nonnegative (x, y) with x + y == total and x*x + y*y == squares."""
    d = 2 * squares - total * total  # (x - y)**2
    if d < 0 or total < 0:
        return []
    r = isqrt(d)
    if r * r != d or (total + r) % 2:
        return []
    x, y = (total + r) // 2, (total - r) // 2
    if y < 0:
        return []
    return [(x, y)] if r == 0 else [(x, y), (y, x)]


def _corner_cuts(n: int, perimeter: int) -> Iterator[tuple[int, int, int, int]]:
    """Yield (T, tA, tB, tC): triangle side T with corners tA, tB, tC cut off.

    With side steps x_i = p_i - 1 the hexagon is
    (T-tA-tB, tB, T-tB-tC, tC, T-tC-tA, tA); it has C(T+2,2) - sum C(t+1,2)
    points and perimeter 3T - sum t.  Fixing both pins sum t and sum t**2, and
    Cauchy-Schwarz confines T to perimeter/2 +- sqrt(D/12).
    """
    big_p = perimeter
    delta = 12 * big_p * big_p + 72 * big_p + 144 - 144 * n
    if delta < 0:
        return
    r = isqrt(delta)
    for big_t in range(max(0, (6 * big_p - r) // 12 - 1), (6 * big_p + r) // 12 + 2):
        sigma = 3 * big_t - big_p
        rest = (big_t + 2) * (big_t + 1) // 2 - n
        if sigma < 0 or rest < 0:
            continue
        squares = 2 * rest - sigma
        spread = 6 * squares - 2 * sigma * sigma
        if spread < 0:
            continue
        w = isqrt(spread)
        for t_a in range(max(0, (sigma - w) // 3 - 1), min(sigma, (sigma + w) // 3 + 1) + 1):
            for t_b, t_c in _split_pair(sigma - t_a, squares - t_a * t_a):
                if max(t_a + t_b, t_b + t_c, t_c + t_a) <= big_t:
                    yield big_t, t_a, t_b, t_c


def seq_from_cuts(big_t: int, t_a: int, t_b: int, t_c: int) -> BoundarySeq:
    return BoundarySeq(
        big_t - t_a - t_b + 1, t_b + 1, big_t - t_b - t_c + 1, t_c + 1, big_t - t_c - t_a + 1, t_a + 1
    )


def find_extremal(n: int, side_bounds: bool = False) -> SearchReport:
    """All canonical boundary sequences of Groemer hexagons with n points and p0(n) boundary discs.

    With ``side_bounds`` the result is further restricted to sequences inside the
    window (a-1)/2 <= p_i <= 2a-c; that window is narrower than the true
    solution set for some n (e.g. n = 16 needs a side of 4 > 2a-c = 3).
    """
    params = decompose(n)
    p0 = p0_of_n(n)
    if params.regular:
        a = params.a
        return SearchReport(n, params, p0, frozenset({BoundarySeq(a, a, a, a, a, a)}))
    found = set()
    for cuts in _corner_cuts(n, p0):
        seq = seq_from_cuts(*cuts)
        if n_of_seq(seq.p1, seq.p2, seq.p3, seq.p4) != n or perimeter_of_seq(seq.p1, seq.p2, seq.p3, seq.p4) != p0:
            raise AssertionError(f"search produced an invalid sequence {seq} for n = {n}")
        if side_bounds and not bounds_ok(seq, params):
            continue
        found.add(canonicalize(seq))
    return SearchReport(n, params, p0, frozenset(found))


def naive_solution_table(n_max: int, side_bounds: bool = False) -> dict[int, frozenset]:
    """Canonical extremal sequences for every n <= n_max by brute force.

    Every quadruple (p1, p2, p3, p4) with entries in [1, p0(n_max) + 1] is
    visited once (vectorized over p2, p3, p4) and binned by the n it produces.
    The window is complete: the six p_i - 1 sum to p0, so no p_i exceeds p0 + 1.
    """
    top = p0_of_n(n_max) + 1
    params = [None] + [decompose(n) for n in range(1, n_max + 1)]
    p0s = np.array([-1] + [p0_of_n(n) for n in range(1, n_max + 1)], dtype=np.int64)
    table: dict[int, set] = {n: set() for n in range(1, n_max + 1)}
    side = np.arange(1, top + 1, dtype=np.int64)
    p2, p3, p4 = (g.ravel() for g in np.meshgrid(side, side, side, indexing="ij"))
    for p1 in range(1, top + 1):
        n = (p1 + p2 - 1) * (p3 + p4 - 1) - p1 * (p1 - 1) // 2 - p4 * (p4 - 1) // 2
        hit = (n >= 1) & (n <= n_max)
        hit[hit] = p1 + 2 * p2[hit] + 2 * p3[hit] + p4[hit] - 6 == p0s[n[hit]]
        p5 = p1 + p2 - p4
        p6 = p3 + p4 - p1
        hit &= (p5 >= 1) & (p6 >= 1)
        for idx in np.flatnonzero(hit).tolist():
            m = int(n[idx])
            if params[m].regular:
                continue
            seq = BoundarySeq(p1, int(p2[idx]), int(p3[idx]), int(p4[idx]), int(p5[idx]), int(p6[idx]))
            if side_bounds and not bounds_ok(seq, params[m]):
                continue
            table[m].add(canonicalize(seq))
    for m in range(1, n_max + 1):
        if params[m].regular:
            a = params[m].a
            table[m] = {BoundarySeq(a, a, a, a, a, a)}
    return {m: frozenset(s) for m, s in table.items()}


def _oracle_flag(n: int) -> bool:
    return find_extremal(n).exceptional


def _br_flag(n: int) -> bool:
    return check_boeroeczky_ruzsa(n) is not None


def _corrected_flag(n: int) -> bool:
    return check_corrected(decompose(n)) is not None


def _wegner_flag(n: int) -> bool:
    return check_wegner_conjecture(decompose(n)) is not None


_PREDICATES: dict[str, Callable[[int], bool]] = {
    "oracle": _oracle_flag,
    "boeroeczky_ruzsa": _br_flag,
    "corrected": _corrected_flag,
    "wegner_conjecture": _wegner_flag,
}


def _chunks(n_max: int, parts: int) -> list[tuple[int, int]]:
    step = -(-n_max // parts)
    return [(lo, min(lo + step - 1, n_max)) for lo in range(1, n_max + 1, step)]


def _scan(args: tuple[str, int, int]) -> list[int]:
    criterion, lo, hi = args
    pred = _PREDICATES[criterion]
    return [n for n in range(lo, hi + 1) if pred(n)]


def _map_chunks(fn, tasks: list, jobs: int) -> Iterable:
    if jobs <= 1:
        return map(fn, tasks)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def enumerate_exceptional(n_max: int, criterion: str = "boeroeczky_ruzsa", jobs: int = 1) -> list[int]:
    """All n <= n_max flagged by ``criterion``, ascending, independent of ``jobs``."""
    if criterion not in _PREDICATES:
        raise ValueError(f"unknown criterion {criterion!r}; expected one of {CRITERIA}")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    tasks = [(criterion, lo, hi) for lo, hi in _chunks(n_max, max(jobs, 1) * 4)]
    out: list[int] = []
    for part in _map_chunks(_scan, tasks, jobs):
        out.extend(part)
    return out


@dataclass(frozen=True)
class Discrepancy:
    n: int
    conjecture: bool
    boeroeczky_ruzsa: bool
    oracle_exceptional: bool


@dataclass(frozen=True)
class CrossValidation:
    n_max: int
    discrepancies: tuple[Discrepancy, ...]
    corrected_mismatches: tuple[int, ...]

    @property
    def conjecture_only(self) -> list[int]:
        return [d.n for d in self.discrepancies if d.conjecture]

    @property
    def conjecture_missed(self) -> list[int]:
        return [d.n for d in self.discrepancies if d.boeroeczky_ruzsa]

    @property
    def oracle_confirms(self) -> bool:
        return all(d.oracle_exceptional == d.boeroeczky_ruzsa for d in self.discrepancies)


def _cross_scan(bounds: tuple[int, int]) -> tuple[list[tuple[int, bool, bool]], list[int]]:
    lo, hi = bounds
    disagree, mismatches = [], []
    for n in range(lo, hi + 1):
        p = decompose(n)
        br = check_boeroeczky_ruzsa(n)
        cor = check_corrected(p)
        if (br is None) != (cor is None) or (br and (br.k, br.l) != (cor.k, cor.l)):
            mismatches.append(n)
        conj = check_wegner_conjecture(p) is not None
        if conj != (br is not None):
            disagree.append((n, conj, br is not None))
    return disagree, mismatches


def _oracle_entry(item: tuple[int, bool, bool]) -> Discrepancy:
    n, conj, br = item
    return Discrepancy(n, conj, br, find_extremal(n).exceptional)


def cross_validate(n_max: int, jobs: int = 1) -> CrossValidation:
    """Compare the conjecture with the Boeroeczky-Ruzsa criterion on [1, n_max].

    The packing oracle is consulted only where the two disagree.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    disagree: list[tuple[int, bool, bool]] = []
    mismatches: list[int] = []
    for d, m in _map_chunks(_cross_scan, _chunks(n_max, max(jobs, 1) * 4), jobs):
        disagree.extend(d)
        mismatches.extend(m)
    entries = tuple(_map_chunks(_oracle_entry, disagree, jobs))
    return CrossValidation(n_max, entries, tuple(mismatches))
