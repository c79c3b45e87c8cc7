"""Lattice hexagons realizing a boundary sequence, with CSV and SVG export.

Points use axial coordinates (u, v) on the triangular lattice.  The Euclidean
position of a unit-disc center is (2u + v, v*sqrt(3)), so squared distances
are the exact integers (2du + dv)**2 + 3 dv**2 and touching discs are at 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Union

from .search import BoundarySeq, perimeter_of_seq

SQRT3 = 1.7320508075688772

# edge directions of the boundary walk, one per side p1..p6
DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


class LatticePoint(NamedTuple):
    u: int
    v: int

    def dist_sq(self, other: LatticePoint) -> int:
        du, dv = self.u - other.u, self.v - other.v
        return (2 * du + dv) ** 2 + 3 * dv * dv

    def neighbors(self) -> Iterator[LatticePoint]:
        for du, dv in DIRECTIONS:
            yield LatticePoint(self.u + du, self.v + dv)


@dataclass(frozen=True)
class HexRealization:
    """Centers of a Groemer packing, stored as one contiguous u-interval per row v.

    ``boundary_count`` follows the perimeter convention sum(p_i - 1): the
    length of the closed boundary walk.  For hexagons with interior area that
    is the number of boundary discs; a collinear set is walked there and back.
    """

    seq: BoundarySeq
    rows: tuple[tuple[int, int, int], ...]  # (v, u_min, u_max)
    vertices: tuple[LatticePoint, ...]
    boundary_count: int

    def __len__(self) -> int:
        return sum(hi - lo + 1 for _, lo, hi in self.rows)

    def iter_points(self) -> Iterator[LatticePoint]:
        for v, lo, hi in self.rows:
            for u in range(lo, hi + 1):
                yield LatticePoint(u, v)

    @cached_property
    def points(self) -> frozenset[LatticePoint]:
        return frozenset(self.iter_points())

    def __contains__(self, pt: object) -> bool:
        if not isinstance(pt, tuple) or len(pt) != 2:
            return False
        u, v = pt
        v0 = self.rows[0][0]
        if not 0 <= v - v0 < len(self.rows):
            return False
        _, lo, hi = self.rows[v - v0]
        return lo <= u <= hi

    @property
    def collinear(self) -> bool:
        return twice_area(self.vertices) == 0

    def is_tight(self, pt: LatticePoint) -> bool:
        """True when pt lies on one of the six supporting lines."""
        p1, p2, p3, p4, _, _ = self.seq
        u, v = pt
        return (
            v == 0
            or u == p1 - 1
            or u + v == p1 + p2 - 2
            or v == p2 + p3 - 2
            or u == p1 - p3 - p4 + 1
            or u + v == 0
        )

    def boundary_points(self) -> Iterator[LatticePoint]:
        last = len(self.rows) - 1
        for i, (v, lo, hi) in enumerate(self.rows):
            if i in (0, last):
                yield from (LatticePoint(u, v) for u in range(lo, hi + 1))
            else:
                yield LatticePoint(lo, v)
                if hi > lo:
                    yield LatticePoint(hi, v)

    def count_tight(self) -> int:
        last = len(self.rows) - 1
        return sum(
            hi - lo + 1 if i in (0, last) else min(2, hi - lo + 1)
            for i, (_, lo, hi) in enumerate(self.rows)
        )


def twice_area(vertices: Iterable[tuple[int, int]]) -> int:
    """Shoelace sum in axial coordinates (zero iff the polygon is degenerate)."""
    vs = list(vertices)
    return abs(sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(vs, vs[1:] + vs[:1])))


def realize(seq: BoundarySeq) -> HexRealization:
    """Lattice hexagon with side p1 on v = 0 starting at the origin."""
    if not isinstance(seq, BoundarySeq):
        seq = BoundarySeq(*seq)
    p1, p2, p3, p4, _, _ = seq
    u, v = 0, 0
    vertices = []
    for (du, dv), p in zip(DIRECTIONS, seq):
        vertices.append(LatticePoint(u, v))
        u, v = u + du * (p - 1), v + dv * (p - 1)
    if (u, v) != (0, 0):
        raise ValueError(f"boundary walk of {seq} does not close")

    u_left, u_right = p1 - p3 - p4 + 1, p1 - 1
    top, diag = p2 + p3 - 2, p1 + p2 - 2
    rows = []
    for row in range(top + 1):
        lo, hi = max(u_left, -row), min(u_right, diag - row)
        if lo > hi:
            raise ValueError(f"empty row {row} in realization of {seq}")
        rows.append((row, lo, hi))

    r = HexRealization(seq, tuple(rows), tuple(vertices), perimeter_of_seq(p1, p2, p3, p4))
    if not r.collinear and r.count_tight() != r.boundary_count:
        raise AssertionError(f"boundary discs of {seq} disagree with the perimeter formula")
    return r


def min_pairwise_distance_sq(r: Union[HexRealization, Iterable[tuple[int, int]]]) -> int:
    """Exact minimum squared center distance.

    Distinct lattice points are at least 4 apart, so one occupied neighbor
    settles it; the all-pairs scan only runs for sets without adjacent points.
    """
    if isinstance(r, HexRealization):
        pts_iter, lookup, size = r.iter_points(), r, len(r)
    else:
        pts = [LatticePoint(*p) for p in r]
        pts_iter, lookup, size = iter(pts), set(pts), len(set(pts))
    if size < 2:
        raise ValueError("need at least two points")
    seen = []
    for pt in pts_iter:
        if any(nb in lookup for nb in pt.neighbors()):
            return 4
        seen.append(pt)
    return min(p.dist_sq(q) for i, p in enumerate(seen) for q in seen[i + 1 :] if p != q)


def export_csv(r: HexRealization) -> str:
    lines = ["u,v"]
    lines.extend(f"{p.u},{p.v}" for p in r.iter_points())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 10.0
    highlight_boundary: bool = True


def export_svg(r: HexRealization, opts: RenderOptions = RenderOptions()) -> str:
    s = opts.scale
    boundary = set(r.boundary_points())
    xs = [2 * p.u + p.v for p in r.vertices]
    ys = [p.v for p in r.vertices]
    x0, x1 = min(xs) - 2, max(xs) + 2
    y_top = max(ys)
    width = s * (x1 - x0)
    height = s * (y_top * SQRT3 + 4)

    style = ".interior{fill:#dde6f0;stroke:#44556b;stroke-width:1}"
    if opts.highlight_boundary:
        style += ".boundary{fill:#f6d8b8;stroke:#b4501e;stroke-width:2}"
    else:
        style += ".boundary{fill:#dde6f0;stroke:#44556b;stroke-width:1}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        f"<style>{style}</style>",
        "<g>",
    ]
    for p in r.iter_points():
        cx = s * (2 * p.u + p.v - x0)
        # SVG y grows downward; flip so v = 0 is at the bottom
        cy = s * ((y_top - p.v) * SQRT3 + 2)
        cls = "boundary" if p in boundary else "interior"
        out.append(f'<circle class="{cls}" cx="{cx:.3f}" cy="{cy:.3f}" r="{s:.3f}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
