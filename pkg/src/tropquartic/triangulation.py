"""Unimodular triangulations of the quartic Newton polygon.

A triangulation is stored as a sorted tuple of 16 sorted triples of
serial point indices. All full triangulations on the 15 lattice points
are automatically unimodular (16 triangles of total area 8 force each
area to be 1/2), so validation only needs to check areas, disjointness
and covering.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .lattice import (
    DEGREE,
    NUM_POINTS,
    POINT_INDEX,
    POINTS,
    S3,
    S3Element,
    serial_permutation,
)

Triangle = tuple[int, int, int]
Edge = tuple[int, int]


@dataclass(frozen=True)
class Triangulation:
    triangles: tuple[Triangle, ...]

    def __post_init__(self):
        tris = tuple(sorted(tuple(sorted(t)) for t in self.triangles))
        object.__setattr__(self, "triangles", tris)

    # -- derived combinatorics -------------------------------------------

    def edges(self) -> dict[Edge, list[Triangle]]:
        """Map each edge to the list of triangles containing it."""
        out: dict[Edge, list[Triangle]] = {}
        for t in self.triangles:
            a, b, c = t
            for e in ((a, b), (a, c), (b, c)):
                out.setdefault(e, []).append(t)
        return out

    def interior_edges(self) -> dict[Edge, tuple[Triangle, Triangle]]:
        return {
            e: (ts[0], ts[1]) for e, ts in self.edges().items() if len(ts) == 2
        }

    def boundary_edges(self) -> list[Edge]:
        return [e for e, ts in self.edges().items() if len(ts) == 1]

    def has_edge(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        e = tuple(sorted((POINT_INDEX[p], POINT_INDEX[q])))
        return e in self.edges()

    def has_triangle(self, pts: Iterable[tuple[int, int]]) -> bool:
        t = tuple(sorted(POINT_INDEX[p] for p in pts))
        return t in set(self.triangles)

    def __iter__(self) -> Iterator[Triangle]:
        return iter(self.triangles)

    def __hash__(self):
        return hash(self.triangles)


def _area2(t: Triangle) -> int:
    """Twice the signed area of a triangle of serial indices."""
    (x1, y1), (x2, y2), (x3, y3) = (POINTS[s] for s in t)
    return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)


def validate(T: Triangulation) -> str | None:
    """Return None if T is a full unimodular triangulation, else a report."""
    tris = T.triangles
    if len(tris) != 16:
        return f"triangle count {len(tris)} != 16"
    if len(set(tris)) != 16:
        return "duplicate triangle"
    covered = set()
    for t in tris:
        if abs(_area2(t)) != 1:
            return f"triangle {t} has lattice area {abs(_area2(t))}/2 != 1/2"
        covered.update(t)
    if covered != set(range(NUM_POINTS)):
        missing = sorted(set(range(NUM_POINTS)) - covered)
        return f"points {missing} not used"
    edge_count: dict[Edge, int] = {}
    for t in tris:
        a, b, c = t
        for e in ((a, b), (a, c), (b, c)):
            edge_count[e] = edge_count.get(e, 0) + 1
    # 16 unimodular triangles using all 15 points cover total area 8 =
    # area of the polygon; overlap-freeness then follows if every edge is
    # in <= 2 triangles and boundary edges are exactly the 12 unit
    # segments of the polygon boundary.
    boundary = set()
    for a in range(DEGREE):
        boundary.add(tuple(sorted((POINT_INDEX[(a, 0)], POINT_INDEX[(a + 1, 0)]))))
        boundary.add(tuple(sorted((POINT_INDEX[(0, a)], POINT_INDEX[(0, a + 1)]))))
        boundary.add(
            tuple(
                sorted(
                    (POINT_INDEX[(a, DEGREE - a)], POINT_INDEX[(a + 1, DEGREE - a - 1)])
                )
            )
        )
    for e, n in edge_count.items():
        if e in boundary:
            if n != 1:
                return f"boundary edge {e} in {n} triangles"
        else:
            if n != 2:
                return f"interior edge {e} in {n} triangles"
    if not boundary <= set(edge_count):
        return "boundary of the polygon not covered by triangle edges"
    return None


# ---------------------------------------------------------------------------
# flips
# ---------------------------------------------------------------------------


def _opposite_vertices(e: Edge, t1: Triangle, t2: Triangle) -> tuple[int, int]:
    c = next(v for v in t1 if v not in e)
    d = next(v for v in t2 if v not in e)
    return c, d


def _cross(o, p, q) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def is_flippable(T: Triangulation, e: Edge) -> bool:
    """An interior edge is flippable iff its two triangles form a
    strictly convex quadrilateral."""
    inter = T.interior_edges()
    if e not in inter:
        return False
    t1, t2 = inter[e]
    c, d = _opposite_vertices(e, t1, t2)
    a, b = e
    pa, pb, pc, pd = POINTS[a], POINTS[b], POINTS[c], POINTS[d]
    # c and d strictly on opposite sides of ab, and a, b strictly on
    # opposite sides of cd
    s1 = _cross(pa, pb, pc)
    s2 = _cross(pa, pb, pd)
    s3 = _cross(pc, pd, pa)
    s4 = _cross(pc, pd, pb)
    return s1 * s2 < 0 and s3 * s4 < 0


def flip(T: Triangulation, e: Edge) -> Triangulation:
    inter = T.interior_edges()
    t1, t2 = inter[e]
    c, d = _opposite_vertices(e, t1, t2)
    a, b = e
    new = [t for t in T.triangles if t not in (t1, t2)]
    new.append(tuple(sorted((a, c, d))))
    new.append(tuple(sorted((b, c, d))))
    return Triangulation(tuple(new))


def flips(T: Triangulation) -> list[tuple[Edge, Triangulation]]:
    out = []
    for e in T.interior_edges():
        if is_flippable(T, e):
            out.append((e, flip(T, e)))
    return out


# ---------------------------------------------------------------------------
# S3 action and canonical forms
# ---------------------------------------------------------------------------


def apply_s3_triangulation(sigma: S3Element, T: Triangulation) -> Triangulation:
    perm = serial_permutation(sigma)
    return Triangulation(
        tuple(tuple(sorted(perm[v] for v in t)) for t in T.triangles)
    )


def canonical_form(T: Triangulation) -> tuple[Triangulation, S3Element]:
    """Lexicographic minimum over the six symmetric images."""
    best = None
    best_sigma = None
    for sigma in S3:
        img = apply_s3_triangulation(sigma, T)
        if best is None or img.triangles < best.triangles:
            best = img
            best_sigma = sigma
    return best, best_sigma


def orbit(T: Triangulation) -> set[Triangulation]:
    return {apply_s3_triangulation(s, T) for s in S3}


# ---------------------------------------------------------------------------
# seeds and enumeration
# ---------------------------------------------------------------------------


def staircase() -> Triangulation:
    """Seed triangulation: every unit cell inside the polygon split by
    its anti-diagonal, plus the hypotenuse triangles along a+b=3."""
    tris: list[Triangle] = []
    for a in range(DEGREE):
        for b in range(DEGREE - a):
            lo = (POINT_INDEX[(a, b)], POINT_INDEX[(a + 1, b)], POINT_INDEX[(a, b + 1)])
            tris.append(tuple(sorted(lo)))
            if a + b <= DEGREE - 2:
                hi = (
                    POINT_INDEX[(a + 1, b)],
                    POINT_INDEX[(a, b + 1)],
                    POINT_INDEX[(a + 1, b + 1)],
                )
                tris.append(tuple(sorted(hi)))
    return Triangulation(tuple(tris))


class NodeCapExceeded(RuntimeError):
    pass


def enumerate_full(
    seed: Triangulation | None = None, cap: int = 10**6
) -> set[Triangulation]:
    """All full triangulations of the polygon, by flip-graph BFS."""
    if seed is None:
        seed = staircase()
    err = validate(seed)
    if err:
        raise ValueError(f"invalid seed: {err}")
    visited = {seed}
    frontier = deque([seed])
    while frontier:
        T = frontier.popleft()
        for _, T2 in flips(T):
            if T2 not in visited:
                if len(visited) >= cap:
                    raise NodeCapExceeded(
                        f"flip-graph closure exceeds node cap {cap}"
                    )
                visited.add(T2)
                frontier.append(T2)
    return visited


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def to_text(T: Triangulation) -> str:
    lines = []
    for t in T.triangles:
        pts = sorted(POINTS[s] for s in t)
        lines.append(" ".join(f"{i},{j}" for i, j in pts))
    return "\n".join(sorted(lines)) + "\n"


def from_text(text: str) -> Triangulation:
    tris = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"expected 3 points per line, got {line!r}")
        tri = []
        for part in parts:
            i, j = (int(x) for x in part.split(","))
            if (i, j) not in POINT_INDEX:
                raise ValueError(f"not a lattice point of the polygon: ({i},{j})")
            tri.append(POINT_INDEX[(i, j)])
        tris.append(tuple(sorted(tri)))
    return Triangulation(tuple(tris))
