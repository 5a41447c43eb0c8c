"""Bitangent classes: connected components of line vertices q whose
tropical line meets the quartic in stable multiplicities {2,2} or {4}.

The predicate is_bitangent(q) is constant on each face of the critical
arrangement consisting of (a) the three lines of directions e1, e2 and
e1+e2 through every curve vertex and (b) the supporting lines of all
curve edges and rays. We test every arrangement vertex, then every
arrangement edge both of whose endpoints were accepted, then every
2-face adjacent to an accepted edge (bitangent classes are closed, so
no cell of a class can be missed this way), and glue accepted faces via
the sign-vector face relation of the arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .curve import TropicalQuartic
from .intersect import curve_pieces, is_bitangent, point_on_curve

Point = tuple[Fraction, Fraction]
Line = tuple[int, int, int]  # a*x + b*y = c, normalized primitive

ZERO = Fraction(0)


def _normalize_line(a: Fraction, b: Fraction, c: Fraction) -> Line:
    m = a.denominator * b.denominator * c.denominator
    ai, bi, ci = int(a * m), int(b * m), int(c * m)
    g = gcd(gcd(abs(ai), abs(bi)), abs(ci)) or 1
    ai, bi, ci = ai // g, bi // g, ci // g
    if ai < 0 or (ai == 0 and bi < 0):
        ai, bi, ci = -ai, -bi, -ci
    return (ai, bi, ci)


def _eval_line(L: Line, p: Point) -> Fraction:
    return L[0] * p[0] + L[1] * p[1] - L[2]


def critical_lines(curve: TropicalQuartic) -> list[Line]:
    lines = set()
    for v in curve.vertices:
        lines.add(_normalize_line(Fraction(1), ZERO, v[0]))
        lines.add(_normalize_line(ZERO, Fraction(1), v[1]))
        lines.add(_normalize_line(Fraction(-1), Fraction(1), v[1] - v[0]))
    for p in curve_pieces(curve):
        w = p.dir
        # line through base with direction w: (-w_y) x + w_x y = const
        a, b = Fraction(-w[1]), Fraction(w[0])
        lines.add(_normalize_line(a, b, a * p.base[0] + b * p.base[1]))
    return sorted(lines)


def _line_intersection(L1: Line, L2: Line) -> Point | None:
    det = L1[0] * L2[1] - L2[0] * L1[1]
    if det == 0:
        return None
    x = Fraction(L1[2] * L2[1] - L2[2] * L1[1], det)
    y = Fraction(L1[0] * L2[2] - L2[0] * L1[2], det)
    return (x, y)


@dataclass(frozen=True)
class ClassCell:
    dim: int
    # dim 0: (p,); dim 1 bounded: (p1, p2); dim 1 ray: (p, None, dir)
    # dim 2: tuple of polygon vertices (clipped at a bounding box when
    # unbounded; `unbounded` records that)
    points: tuple
    on_curve: bool
    unbounded: bool = False
    # a point in the cell's relative interior (the point itself for dim 0)
    sample: Point = None


@dataclass(frozen=True)
class BitangentClass:
    cells: tuple[ClassCell, ...]
    vertex_coincidences: tuple[Point, ...]  # class points that are curve vertices

    def dim(self) -> int:
        return max(c.dim for c in self.cells)

    def all_points(self) -> list[Point]:
        pts = []
        for c in self.cells:
            if c.dim == 0:
                pts.append(c.points[0])
        return pts


class ClassExtractionError(RuntimeError):
    pass


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def bitangent_classes(curve: TropicalQuartic) -> list[BitangentClass]:
    lines = critical_lines(curve)
    nl = len(lines)

    # arrangement vertices
    verts: dict[Point, int] = {}
    for i in range(nl):
        for j in range(i + 1, nl):
            p = _line_intersection(lines[i], lines[j])
            if p is not None and p not in verts:
                verts[p] = len(verts)
    vlist = list(verts)

    accepted_v = {p for p in vlist if is_bitangent(p, curve)}

    # arrangement edges per line: consecutive accepted vertex pairs and
    # the two unbounded end pieces
    cells: list[tuple] = []  # ("v", p) | ("e", p1, p2) | ("r", p, d) | ("f", key, probe)
    for p in accepted_v:
        cells.append(("v", p))

    edge_cells = []
    for L in lines:
        a, b, _ = L
        d = (b, -a)  # direction of the line
        on_line = [p for p in vlist if _eval_line(L, p) == 0]
        on_line.sort(key=lambda p: (d[0] * p[0] + d[1] * p[1]))
        for p1, p2 in zip(on_line, on_line[1:]):
            if p1 in accepted_v and p2 in accepted_v:
                mid = ((p1[0] + p2[0]) / 2, (p1[1] + p2[1]) / 2)
                if is_bitangent(mid, curve):
                    edge_cells.append(("e", p1, p2, mid))
        if on_line:
            for p, sgn in ((on_line[0], -1), (on_line[-1], 1)):
                if p in accepted_v:
                    dd = (sgn * d[0], sgn * d[1])
                    probe = (p[0] + dd[0], p[1] + dd[1])
                    if is_bitangent(probe, curve):
                        edge_cells.append(("r", p, dd, probe))
    cells.extend(c[:-1] for c in edge_cells)

    # 2-faces adjacent to accepted edges, identified by their sign vector
    face_cells: dict[tuple, Point] = {}
    for ec in edge_cells:
        probe_pt = ec[-1]
        if ec[0] == "e":
            base = probe_pt
            d = (ec[2][0] - ec[1][0], ec[2][1] - ec[1][1])
        else:
            base = probe_pt
            d = ec[2]
        n = (-d[1], d[0])
        for side in (1, -1):
            nn = (side * n[0], side * n[1])
            # step just far enough to stay strictly inside the adjacent face
            delta = None
            for L in lines:
                lv = _eval_line(L, base)
                ln = L[0] * nn[0] + L[1] * nn[1]
                if lv != 0 and ln != 0:
                    step = -lv / ln
                    if step > 0 and (delta is None or step < delta):
                        delta = step
            delta = Fraction(1) if delta is None else delta / 2
            p = (base[0] + delta * nn[0], base[1] + delta * nn[1])
            key = tuple(_sign(_eval_line(L, p)) for L in lines)
            if key in face_cells:
                continue
            if is_bitangent(p, curve):
                face_cells[key] = p
    for key, p in face_cells.items():
        cells.append(("f", key, p))

    # glue cells into connected components via the arrangement face
    # relation: a cell is on the boundary of another iff its sign vector
    # weakly refines it (equal where nonzero)
    sigs = []
    for c in cells:
        if c[0] == "v":
            rep = c[1]
        elif c[0] == "e":
            rep = ((c[1][0] + c[2][0]) / 2, (c[1][1] + c[2][1]) / 2)
        elif c[0] == "r":
            rep = (c[1][0] + c[2][0], c[1][1] + c[2][1])
        else:
            rep = c[2]
        sigs.append(tuple(_sign(_eval_line(L, rep)) for L in lines))

    parent = list(range(len(cells)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    def refines(sa, sb) -> bool:
        return all(a == 0 or a == b for a, b in zip(sa, sb))

    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if refines(sigs[i], sigs[j]) or refines(sigs[j], sigs[i]):
                union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(len(cells)):
        groups.setdefault(find(i), []).append(i)

    classes = []
    curve_vertex_set = set(curve.vertices)
    for members in groups.values():
        ccells = []
        coincidences = []
        for i in members:
            c = cells[i]
            if c[0] == "v":
                p = c[1]
                ccells.append(ClassCell(0, (p,), point_on_curve(p, curve), sample=p))
                if p in curve_vertex_set:
                    coincidences.append(p)
            elif c[0] == "e":
                mid = ((c[1][0] + c[2][0]) / 2, (c[1][1] + c[2][1]) / 2)
                ccells.append(
                    ClassCell(1, (c[1], c[2]), point_on_curve(mid, curve), sample=mid)
                )
            elif c[0] == "r":
                rep = (c[1][0] + c[2][0], c[1][1] + c[2][1])
                ccells.append(
                    ClassCell(
                        1, (c[1], None, c[2]), point_on_curve(rep, curve),
                        unbounded=True, sample=rep,
                    )
                )
            else:
                poly, unb = _face_polygon(lines, sigs[i], curve)
                ccells.append(
                    ClassCell(2, tuple(poly), False, unbounded=unb, sample=cells[i][2])
                )
        classes.append(BitangentClass(tuple(ccells), tuple(sorted(coincidences))))

    if len(classes) != 7:
        raise ClassExtractionError(
            f"expected 7 bitangent classes, found {len(classes)}"
        )
    return classes


def _face_polygon(lines, sig, curve) -> tuple[list[Point], bool]:
    """Clip a generous bounding box by every line, keeping the side the
    face lies on; returns the polygon and whether it hits the box."""
    xs = [v[0] for v in curve.vertices]
    ys = [v[1] for v in curve.vertices]
    m = Fraction(10)
    lo_x, hi_x = min(xs) - m, max(xs) + m
    lo_y, hi_y = min(ys) - m, max(ys) + m
    poly: list[Point] = [
        (lo_x, lo_y), (hi_x, lo_y), (hi_x, hi_y), (lo_x, hi_y)
    ]
    for L, s in zip(lines, sig):
        if s == 0:
            continue
        poly = _clip(poly, L, s)
        if not poly:
            return [], False
    unbounded = any(
        p[0] in (lo_x, hi_x) or p[1] in (lo_y, hi_y) for p in poly
    )
    return poly, unbounded


def _clip(poly: list[Point], L: Line, keep_sign: int) -> list[Point]:
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        vp, vq = _eval_line(L, p) * keep_sign, _eval_line(L, q) * keep_sign
        if vp >= 0:
            out.append(p)
        if (vp > 0 and vq < 0) or (vp < 0 and vq > 0):
            t = vp / (vp - vq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out
