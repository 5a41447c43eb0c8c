"""Stable intersection of a tropical line with a tropical quartic.

The line with vertex q has rays in directions -e1, -e2, e1+e2, all of
weight 1. Its stable intersection with the curve is the limit of the
transversal intersections of the line translated by eps*d for a generic
direction d and eps -> 0+. We compute this exactly to first order in
eps: every intersection parameter is an affine function t0 + eps*t1 and
range membership for all small eps > 0 is a lexicographic test on
(t0, t1). No explicit epsilon is ever chosen.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .curve import TropicalQuartic, _primitive, edge_direction, lattice_length

Point = tuple[Fraction, Fraction]

LINE_DIRECTIONS = ((-1, 0), (0, -1), (1, 1))

# Perturbation direction: not parallel to any direction a quartic edge
# or line ray can have (all of those have coordinates in [-4, 4]).
PERTURB = (13, 8)


@dataclass(frozen=True)
class Piece:
    """A parametrized closed piece base + t*dir, t in [0, tmax] (tmax
    None = unbounded), with dir a primitive integer vector."""

    base: Point
    dir: tuple[int, int]
    tmax: Fraction | None


def line_pieces(q: Point) -> tuple[Piece, ...]:
    return tuple(Piece(q, d, None) for d in LINE_DIRECTIONS)


def curve_pieces(curve: TropicalQuartic) -> tuple[Piece, ...]:
    cached = getattr(curve, "_pieces", None)
    if cached is not None:
        return cached
    out = []
    for e in curve.bounded_edges:
        w = edge_direction(curve, e)
        out.append(Piece(curve.vertices[e.v1], w, lattice_length(curve, e)))
    for r in curve.rays:
        out.append(Piece(curve.vertices[r.vertex], r.direction, None))
    pieces = tuple(out)
    object.__setattr__(curve, "_pieces", pieces)  # memo on the frozen host
    return pieces


def _piece_ranges(p: Piece):
    """(x, y, y-x) intervals of a piece; None bound = unbounded."""
    x0, y0 = p.base
    if p.tmax is None:
        x1 = y1 = None
        dx, dy = p.dir
        xs = (x0, None if dx > 0 else x0) if dx >= 0 else (None, x0)
        ys = (y0, None if dy > 0 else y0) if dy >= 0 else (None, y0)
        dd = dy - dx
        d0 = y0 - x0
        ds = (d0, None if dd > 0 else d0) if dd >= 0 else (None, d0)
        return xs, ys, ds
    x1 = x0 + p.tmax * p.dir[0]
    y1 = y0 + p.tmax * p.dir[1]
    return (
        (min(x0, x1), max(x0, x1)),
        (min(y0, y1), max(y0, y1)),
        (min(y0 - x0, y1 - x1), max(y0 - x0, y1 - x1)),
    )


def piece_ranges(curve: TropicalQuartic):
    cached = getattr(curve, "_piece_ranges", None)
    if cached is not None:
        return cached
    ranges = tuple(_piece_ranges(p) for p in curve_pieces(curve))
    object.__setattr__(curve, "_piece_ranges", ranges)
    return ranges


def _contains(interval, v) -> bool:
    lo, hi = interval
    return (lo is None or lo <= v) and (hi is None or v <= hi)


def _reachable(q: Point, u: tuple[int, int], ranges) -> bool:
    """Necessary condition for the line ray (q, u) to meet a piece with
    the given coordinate ranges."""
    xs, ys, ds = ranges
    if u == (-1, 0):
        return _contains(ys, q[1]) and (xs[0] is None or xs[0] <= q[0])
    if u == (0, -1):
        return _contains(xs, q[0]) and (ys[0] is None or ys[0] <= q[1])
    return _contains(ds, q[1] - q[0]) and (xs[1] is None or xs[1] >= q[0])


def _lex_ge_zero(a0: Fraction, a1: Fraction) -> bool:
    return a0 > 0 or (a0 == 0 and a1 >= 0)


def _in_range(t0: Fraction, t1: Fraction, tmax: Fraction | None) -> bool:
    """t0 + eps*t1 in [0, tmax] for all small eps > 0."""
    if not _lex_ge_zero(t0, t1):
        return False
    if tmax is not None and not _lex_ge_zero(tmax - t0, -t1):
        return False
    return True


@dataclass(frozen=True)
class Crossing:
    limit: Point  # limit of the transversal intersection point
    multiplicity: int


def crossings(q: Point, curve: TropicalQuartic, sign: int = 1) -> list[Crossing]:
    """Transversal intersections of the line translated by
    sign*eps*PERTURB with the curve, for infinitesimal eps > 0."""
    d = (sign * PERTURB[0], sign * PERTURB[1])
    ranges = piece_ranges(curve)
    out = []
    for lp in line_pieces(q):
        u = lp.dir
        for cp, rng in zip(curve_pieces(curve), ranges):
            if not _reachable(q, u, rng):
                continue
            w = cp.dir
            det = u[0] * (-w[1]) - (-w[0]) * u[1]
            if det == 0:
                continue  # parallel pieces never cross after perturbation
            # solve u*t - w*s = (a - q) - eps*d
            rx, ry = cp.base[0] - q[0], cp.base[1] - q[1]
            t0 = (rx * (-w[1]) - (-w[0]) * ry) / det
            s0 = (u[0] * ry - rx * u[1]) / det
            t1 = Fraction(-d[0] * (-w[1]) + (-w[0]) * d[1], det)
            s1 = Fraction(u[0] * (-d[1]) + d[0] * u[1], det)
            if _in_range(t0, t1, lp.tmax) and _in_range(s0, s1, cp.tmax):
                p = (q[0] + t0 * u[0], q[1] + t0 * u[1])
                out.append(Crossing(p, abs(det)))
    return out


# ---------------------------------------------------------------------------
# set-theoretic intersection and components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    """A convex piece of the set-theoretic intersection: a point
    (dir = (0,0)) or a segment/ray base + t*dir, t in [0, hi]."""

    base: Point
    dir: tuple[int, int]
    hi: Fraction | None  # None = unbounded; ignored for points
    line_ray: int = -1  # index into LINE_DIRECTIONS
    curve_piece: int = -1  # index into curve_pieces(curve)

    def is_point(self) -> bool:
        return self.dir == (0, 0)

    def endpoint(self) -> Point | None:
        if self.is_point():
            return self.base
        if self.hi is None:
            return None
        return (self.base[0] + self.hi * self.dir[0],
                self.base[1] + self.hi * self.dir[1])


def _param(piece: Piece, p: Point) -> Fraction:
    """Parameter of a point known to lie on the piece's line."""
    u = piece.dir
    return ((p[0] - piece.base[0]) * u[0] + (p[1] - piece.base[1]) * u[1]) \
        / Fraction(u[0] * u[0] + u[1] * u[1])


def _piece_intersection(p1: Piece, p2: Piece) -> Atom | None:
    u, w = p1.dir, p2.dir
    det = u[0] * w[1] - w[0] * u[1]
    rx, ry = p2.base[0] - p1.base[0], p2.base[1] - p1.base[1]
    if det != 0:
        t = (rx * w[1] - w[0] * ry) / det
        s = (rx * u[1] - u[0] * ry) / det
        if t < 0 or (p1.tmax is not None and t > p1.tmax):
            return None
        if s < 0 or (p2.tmax is not None and s > p2.tmax):
            return None
        return Atom((p1.base[0] + t * u[0], p1.base[1] + t * u[1]), (0, 0), None)
    # parallel: overlap only if collinear
    if rx * u[1] - ry * u[0] != 0:
        return None
    # express p2's interval in p1's parameter
    a = _param(p1, p2.base)
    if p2.tmax is None:
        b = None
        forward = (u[0] * w[0] + u[1] * w[1]) > 0
        lo, hi = (a, None) if forward else (None, a)
    else:
        b = _param(p1, (p2.base[0] + p2.tmax * w[0], p2.base[1] + p2.tmax * w[1]))
        lo, hi = (a, b) if a <= b else (b, a)
    # intersect with p1's own interval [0, p1.tmax]
    lo = Fraction(0) if lo is None else max(lo, Fraction(0))
    if p1.tmax is not None:
        hi = p1.tmax if hi is None else min(hi, p1.tmax)
    if hi is not None and hi < lo:
        return None
    base = (p1.base[0] + lo * u[0], p1.base[1] + lo * u[1])
    if hi is not None and hi == lo:
        return Atom(base, (0, 0), None)
    return Atom(base, u, None if hi is None else hi - lo)


def _atom_contains(a: Atom, p: Point) -> bool:
    if a.is_point():
        return a.base == p
    u = a.dir
    cx, cy = p[0] - a.base[0], p[1] - a.base[1]
    if cx * u[1] - cy * u[0] != 0:
        return False
    t = (cx * u[0] + cy * u[1]) / Fraction(u[0] ** 2 + u[1] ** 2)
    return t >= 0 and (a.hi is None or t <= a.hi)


def _atoms_touch(a: Atom, b: Atom) -> bool:
    if a.is_point():
        return _atom_contains(b, a.base)
    if b.is_point():
        return _atom_contains(a, b.base)
    det = a.dir[0] * b.dir[1] - b.dir[0] * a.dir[1]
    if det != 0:
        u, w = a.dir, b.dir
        rx, ry = b.base[0] - a.base[0], b.base[1] - a.base[1]
        t = (rx * w[1] - w[0] * ry) / det
        s = (rx * u[1] - u[0] * ry) / det
        return (t >= 0 and (a.hi is None or t <= a.hi)
                and s >= 0 and (b.hi is None or s <= b.hi))
    # parallel segments: collinear and overlapping intervals
    rx, ry = b.base[0] - a.base[0], b.base[1] - a.base[1]
    if rx * a.dir[1] - ry * a.dir[0] != 0:
        return False
    pa = Piece(a.base, a.dir, a.hi)
    lo1, hi1 = Fraction(0), a.hi
    p = _param(pa, b.base)
    forward = (a.dir[0] * b.dir[0] + a.dir[1] * b.dir[1]) > 0
    if b.hi is None:
        lo2, hi2 = (p, None) if forward else (None, p)
    else:
        q2 = _param(pa, (b.base[0] + b.hi * b.dir[0], b.base[1] + b.hi * b.dir[1]))
        lo2, hi2 = min(p, q2), max(p, q2)
    lo = lo1 if lo2 is None else max(lo1, lo2)
    if hi1 is None:
        hi = hi2
    elif hi2 is None:
        hi = hi1
    else:
        hi = min(hi1, hi2)
    return hi is None or lo <= hi


@dataclass(frozen=True)
class IntersectionComponent:
    atoms: tuple[Atom, ...]
    multiplicity: int

    def contains(self, p: Point) -> bool:
        return any(_atom_contains(a, p) for a in self.atoms)


def stable_intersection(
    q: Point, curve: TropicalQuartic, sign: int = 1
) -> list[IntersectionComponent]:
    """Components of the set-theoretic intersection with their stable
    multiplicities; multiplicities always sum to 4."""
    cpieces = curve_pieces(curve)
    ranges = piece_ranges(curve)
    atoms: list[Atom] = []
    for li, lp in enumerate(line_pieces(q)):
        for ci, (cp, rng) in enumerate(zip(cpieces, ranges)):
            if not _reachable(q, lp.dir, rng):
                continue
            a = _piece_intersection(lp, cp)
            if a is not None:
                atoms.append(replace(a, line_ray=li, curve_piece=ci))
    # union-find over touching atoms
    parent = list(range(len(atoms)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            if _atoms_touch(atoms[i], atoms[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[Atom]] = {}
    for i, a in enumerate(atoms):
        groups.setdefault(find(i), []).append(a)
    comps = []
    cross = crossings(q, curve, sign)
    assert sum(c.multiplicity for c in cross) == 4, "total multiplicity != 4"
    for members in groups.values():
        mult = 0
        for c in cross:
            if any(_atom_contains(a, c.limit) for a in members):
                mult += c.multiplicity
        comps.append(IntersectionComponent(tuple(members), mult))
    assert sum(c.multiplicity for c in comps) == 4
    return comps


def point_on_curve(p: Point, curve: TropicalQuartic) -> bool:
    return any(
        _atom_contains(Atom(cp.base, cp.dir, cp.tmax), p)
        for cp in curve_pieces(curve)
    )


def is_bitangent(q: Point, curve: TropicalQuartic) -> bool:
    """True iff the positive multiplicities form {2, 2} or {4}."""
    mults = sorted(c.multiplicity for c in stable_intersection(q, curve)
                   if c.multiplicity > 0)
    return mults == [2, 2] or mults == [4]
