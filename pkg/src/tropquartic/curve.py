"""Tropical quartic curves from rational height vectors.

Conventions (pinned by the worked height-vector fixtures in the tests):
the curve is the corner locus of max(lambda_ij + i*x + j*y), which is
the same set as the corner locus written min-plus with coefficients
-lambda_ij. Its dual subdivision is the upper-face subdivision of the
point set lifted by lambda (equivalently the lower faces of the lift by
-lambda). Curve edges are orthogonal to their dual subdivision edges;
rays point so that the two monomials of the dual boundary edge dominate
along them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .lattice import NUM_POINTS, POINTS
from .triangulation import Triangle, Triangulation, validate

Height = tuple[Fraction, ...]
Point = tuple[Fraction, Fraction]


def parse_heights(text: str) -> Height:
    """Parse 15 rationals, one per line, in serial order.

    Accepts "p/q" and finite decimal strings (Fraction handles both).
    """
    vals = []
    for line in text.strip().splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        vals.append(Fraction(line))
    if len(vals) != NUM_POINTS:
        raise ValueError(f"expected 15 heights, got {len(vals)}")
    return tuple(vals)


def format_heights(h: Height) -> str:
    return "\n".join(str(x) for x in h) + "\n"


def _integerize(h: Height) -> tuple[int, ...]:
    """Scale by the common denominator; the subdivision is invariant."""
    m = lcm(*(x.denominator for x in h)) if h else 1
    return tuple(int(x * m) for x in h)


def dual_subdivision(lam: Height) -> Triangulation | None:
    """Regular subdivision induced by coefficients -lambda (equivalently
    the lower faces of the lift by lambda). Returns None when the
    subdivision is not a full triangulation (heights on a cone boundary,
    or some point not on the lower hull)."""
    h = _integerize(tuple(-Fraction(x) for x in lam))
    tris: list[Triangle] = []
    idx = range(NUM_POINTS)
    for a, b, c in combinations(idx, 3):
        (xa, ya), (xb, yb), (xc, yc) = POINTS[a], POINTS[b], POINTS[c]
        area2 = (xb - xa) * (yc - ya) - (xc - xa) * (yb - ya)
        if area2 == 0:
            continue
        # f(m) = det[[1,pa,ha],[1,pb,hb],[1,pc,hc],[1,pm,hm]] has
        # coefficient area2 on hm; f(m)*sign(area2) > 0 iff m lifts
        # strictly above the plane through the lifted triple.
        ha, hb, hc = h[a], h[b], h[c]
        lower = True
        coplanar = False
        for m in idx:
            if m in (a, b, c):
                continue
            xm, ym = POINTS[m]
            f = -ha * _det3(xb, yb, xc, yc, xm, ym) \
                + hb * _det3(xa, ya, xc, yc, xm, ym) \
                - hc * _det3(xa, ya, xb, yb, xm, ym) \
                + h[m] * area2
            s = f if area2 > 0 else -f
            if s == 0:
                coplanar = True  # only fatal if the triple is a lower face
            elif s < 0:
                lower = False
                break
        if lower:
            if coplanar:
                return None  # a lower cell bigger than a triangle
            tris.append(tuple(sorted((a, b, c))))
    if len(tris) != 16:
        return None
    T = Triangulation(tuple(tris))
    if validate(T) is not None:
        return None
    return T


def _det3(x1, y1, x2, y2, x3, y3) -> int:
    return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)


# ---------------------------------------------------------------------------
# the curve
# ---------------------------------------------------------------------------


def _primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


@dataclass(frozen=True)
class BoundedEdge:
    v1: int  # vertex indices into TropicalQuartic.vertices
    v2: int
    dual: tuple[int, int]  # interior dual edge (serial indices)


@dataclass(frozen=True)
class Ray:
    vertex: int
    direction: tuple[int, int]  # primitive integer direction
    dual: tuple[int, int]  # boundary dual edge


@dataclass(frozen=True)
class TropicalQuartic:
    coefficients: Height  # max-plus coefficients (= lambda)
    dual: Triangulation
    vertices: tuple[Point, ...]  # vertices[k] dual to dual.triangles[k]
    bounded_edges: tuple[BoundedEdge, ...]
    rays: tuple[Ray, ...]

    def vertex_of(self, tri: Triangle) -> Point:
        return self.vertices[self.dual.triangles.index(tri)]


def triangle_vertex(tri: Triangle, c: Height) -> Point:
    """Curve vertex dual to a triangle: where its three monomials agree."""
    m1, m2, m3 = tri
    (x1, y1), (x2, y2), (x3, y3) = POINTS[m1], POINTS[m2], POINTS[m3]
    # (m1-m2).v = c2 - c1 ; (m1-m3).v = c3 - c1
    a11, a12, b1 = x1 - x2, y1 - y2, c[m2] - c[m1]
    a21, a22, b2 = x1 - x3, y1 - y3, c[m3] - c[m1]
    det = Fraction(a11 * a22 - a12 * a21)
    vx = (b1 * a22 - b2 * a12) / det
    vy = (a11 * b2 - a21 * b1) / det
    return (vx, vy)


def build_curve(lam: Height) -> TropicalQuartic:
    T = dual_subdivision(lam)
    if T is None:
        raise ValueError("heights are non-generic: no dual triangulation")
    c = tuple(Fraction(x) for x in lam)
    verts = tuple(triangle_vertex(t, c) for t in T.triangles)
    tri_index = {t: k for k, t in enumerate(T.triangles)}
    bedges = []
    for e, (t1, t2) in sorted(T.interior_edges().items()):
        bedges.append(BoundedEdge(tri_index[t1], tri_index[t2], e))
    rays = []
    edge_map = T.edges()
    for e in sorted(T.boundary_edges()):
        (t,) = edge_map[e]
        a, b = e
        cc = next(v for v in t if v not in e)
        pa, pb, pc = POINTS[a], POINTS[b], POINTS[cc]
        d = _primitive((-(pa[1] - pb[1]), pa[0] - pb[0]))
        if (pa[0] - pc[0]) * d[0] + (pa[1] - pc[1]) * d[1] < 0:
            d = (-d[0], -d[1])
        rays.append(Ray(tri_index[t], d, e))
    return TropicalQuartic(c, T, verts, tuple(bedges), tuple(rays))


def edge_direction(curve: TropicalQuartic, e: BoundedEdge) -> tuple[int, int]:
    """Primitive direction from e.v1 towards e.v2 (zero edge disallowed)."""
    v1, v2 = curve.vertices[e.v1], curve.vertices[e.v2]
    dx, dy = v2[0] - v1[0], v2[1] - v1[1]
    if dx == 0 and dy == 0:
        raise ValueError("zero-length edge: heights on a cone boundary")
    # direction is orthogonal to the dual edge, hence rational multiples
    # of a primitive integer vector
    pa, pb = POINTS[e.dual[0]], POINTS[e.dual[1]]
    w = _primitive((-(pa[1] - pb[1]), pa[0] - pb[0]))
    # orient along (dx, dy)
    if dx * w[0] + dy * w[1] < 0:
        w = (-w[0], -w[1])
    return w


def lattice_length(curve: TropicalQuartic, e: BoundedEdge) -> Fraction:
    v1, v2 = curve.vertices[e.v1], curve.vertices[e.v2]
    w = edge_direction(curve, e)
    num = (v2[0] - v1[0]) * w[0] + (v2[1] - v1[1]) * w[1]
    return num / Fraction(w[0] * w[0] + w[1] * w[1])


def genericity_check(curve: TropicalQuartic) -> list[dict]:
    """Report ties of the minimum among the three edge lengths at every
    vertex whose three adjacent bounded edges have directions -e1, -e2,
    e1+e2. Empty list = generic."""
    by_vertex: dict[int, list[tuple[tuple[int, int], Fraction]]] = {}
    for e in curve.bounded_edges:
        ln = lattice_length(curve, e)
        d12 = edge_direction(curve, e)
        by_vertex.setdefault(e.v1, []).append((d12, ln))
        by_vertex.setdefault(e.v2, []).append(((-d12[0], -d12[1]), ln))
    reports = []
    target = {(-1, 0), (0, -1), (1, 1)}
    for k, adj in by_vertex.items():
        if len(adj) == 3 and {d for d, _ in adj} == target:
            lengths = sorted(ln for _, ln in adj)
            if lengths[0] == lengths[1]:
                reports.append(
                    {"vertex": k, "lengths": [ln for _, ln in adj]}
                )
    return reports


# ---------------------------------------------------------------------------
# symbolic vertex/length functionals (used by the c-genericity flag)
# ---------------------------------------------------------------------------


def vertex_matrix(tri: Triangle) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """2x15 matrix M with vertex(tri) = M . c for coefficient vectors c."""
    m1, m2, m3 = tri
    (x1, y1), (x2, y2), (x3, y3) = POINTS[m1], POINTS[m2], POINTS[m3]
    a11, a12 = x1 - x2, y1 - y2
    a21, a22 = x1 - x3, y1 - y3
    det = Fraction(a11 * a22 - a12 * a21)
    rowx = [Fraction(0)] * NUM_POINTS
    rowy = [Fraction(0)] * NUM_POINTS
    # b1 = c[m2]-c[m1], b2 = c[m3]-c[m1]
    for m, cb1, cb2 in ((m1, -1, -1), (m2, 1, 0), (m3, 0, 1)):
        rowx[m] += (cb1 * a22 - cb2 * a12) / det
        rowy[m] += (a11 * cb2 - a21 * cb1) / det
    return tuple(rowx), tuple(rowy)


def length_functional(
    T: Triangulation, e: tuple[int, int], reference_c: Height
) -> tuple[Fraction, ...]:
    """The lattice length of the curve edge dual to interior edge e, as a
    linear functional of the coefficient vector c; signed so that it is
    positive at reference_c (a coefficient vector inducing T)."""
    t1, t2 = T.interior_edges()[e]
    m1x, m1y = vertex_matrix(t1)
    m2x, m2y = vertex_matrix(t2)
    pa, pb = POINTS[e[0]], POINTS[e[1]]
    w = _primitive((-(pa[1] - pb[1]), pa[0] - pb[0]))
    ww = Fraction(w[0] * w[0] + w[1] * w[1])
    func = tuple(
        (w[0] * (m2x[s] - m1x[s]) + w[1] * (m2y[s] - m1y[s])) / ww
        for s in range(NUM_POINTS)
    )
    val = sum(f * cv for f, cv in zip(func, reference_c))
    if val == 0:
        raise ValueError("reference coefficients lie on a cone boundary")
    if val < 0:
        func = tuple(-f for f in func)
    return func


# ---------------------------------------------------------------------------
# JSON export
# ---------------------------------------------------------------------------


def curve_to_json(curve: TropicalQuartic) -> dict:
    return {
        "coefficients": [str(x) for x in curve.coefficients],
        "dual_triangles": [list(t) for t in curve.dual.triangles],
        "vertices": [[str(v[0]), str(v[1])] for v in curve.vertices],
        "bounded_edges": [
            {"v1": e.v1, "v2": e.v2, "dual": list(e.dual)}
            for e in curve.bounded_edges
        ],
        "rays": [
            {"vertex": r.vertex, "direction": list(r.direction), "dual": list(r.dual)}
            for r in curve.rays
        ],
    }
