"""Regularity certification by exact linear programming.

A triangulation is regular iff some height vector h makes every
interior-edge fold strictly convex on the lower hull. We solve

    max t  s.t.  fold_e(h) >= t for all interior edges e,  0 <= t <= 1

with h free, in exact rational arithmetic (textbook simplex, Bland's
rule). The optimum is 1 for regular triangulations and 0 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import NUM_POINTS, POINTS
from .triangulation import Triangulation

ZERO = Fraction(0)
ONE = Fraction(1)


def fold_functional(T: Triangulation, e: tuple[int, int]) -> tuple[int, ...]:
    """Integer linear functional of h, positive iff the lift folds
    convexly (on the lower hull) across interior edge e."""
    t1, t2 = T.interior_edges()[e]
    a, b = e
    c = next(v for v in t1 if v not in e)
    d = next(v for v in t2 if v not in e)
    (xa, ya), (xb, yb), (xc, yc), (xd, yd) = (POINTS[s] for s in (a, b, c, d))
    coeff = [0] * NUM_POINTS
    # det[[1,pa,ha],[1,pb,hb],[1,pc,hc],[1,pd,hd]] expanded on the h column
    coeff[a] = -_det3(xb, yb, xc, yc, xd, yd)
    coeff[b] = _det3(xa, ya, xc, yc, xd, yd)
    coeff[c] = -_det3(xa, ya, xb, yb, xd, yd)
    coeff[d] = _det3(xa, ya, xb, yb, xc, yc)
    # the functional is positive when d lifts above the plane through
    # a, b, c; that is the case when it increases with h[d]
    if coeff[d] < 0:
        coeff = [-x for x in coeff]
    return tuple(coeff)


def _det3(x1, y1, x2, y2, x3, y3) -> int:
    return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)


def _simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """max c.x s.t. A.x <= b, x >= 0, with b >= 0. Returns (value, x).

    Dense tableau simplex with Bland's anticycling rule; exact rationals.
    """
    m, n = len(A), len(c)
    # tableau rows: [A | I | b]; objective row: [-c | 0 | 0]
    tab = [row[:] + [ONE if i == j else ZERO for j in range(m)] + [b[i]]
           for i, row in enumerate(A)]
    obj = [-x for x in c] + [ZERO] * m + [ZERO]
    basis = [n + i for i in range(m)]
    total = n + m
    while True:
        # Bland: entering = smallest index with negative reduced cost
        enter = next((j for j in range(total) if obj[j] < 0), None)
        if enter is None:
            break
        # ratio test, ties broken by smallest basis index (Bland)
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("LP unbounded (should not happen here)")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter
    x = [ZERO] * total
    for i in range(m):
        x[basis[i]] = tab[i][total]
    return obj[total], x[:n]


@dataclass(frozen=True)
class SecondaryConeWitness:
    triangulation: Triangulation
    interior_point: tuple[Fraction, ...]  # heights lambda (valuation scale)
    slacks: dict[tuple[int, int], Fraction]  # fold value per interior edge


def _strict_cone_point(functionals) -> tuple[Fraction, tuple[Fraction, ...]]:
    """max t s.t. f(lam) >= t for every functional f, t <= 1, lam free.

    Returns (t*, lam). t* > 0 certifies a point with all functionals
    strictly positive; t* = 0 certifies there is none (homogeneity).
    """
    n = 2 * NUM_POINTS + 1
    t_col = 2 * NUM_POINTS
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for f in functionals:
        row = [ZERO] * n
        for s in range(NUM_POINTS):
            row[s] = Fraction(-f[s])
            row[NUM_POINTS + s] = Fraction(f[s])
        row[t_col] = ONE
        A.append(row)  # t - f(lam) <= 0
        b.append(ZERO)
    row = [ZERO] * n
    row[t_col] = ONE
    A.append(row)  # t <= 1
    b.append(ONE)
    c = [ZERO] * n
    c[t_col] = ONE
    value, x = _simplex_max(A, b, c)
    lam = tuple(x[s] - x[NUM_POINTS + s] for s in range(NUM_POINTS))
    return value, lam


def cone_functionals(T: Triangulation) -> dict[tuple[int, int], tuple[int, ...]]:
    """Per interior edge, the linear functional of lambda that is
    positive exactly when lambda lies on edge e's strict side of the
    secondary cone (fold functionals restated on the valuation scale
    lambda = -h)."""
    return {
        e: tuple(-x for x in fold_functional(T, e))
        for e in sorted(T.interior_edges())
    }


def is_regular(T: Triangulation) -> SecondaryConeWitness | None:
    funcs = cone_functionals(T)
    value, lam = _strict_cone_point(list(funcs.values()))
    if value <= 0:
        return None
    slacks = {
        e: sum(Fraction(fs) * lv for fs, lv in zip(f, lam))
        for e, f in funcs.items()
    }
    assert all(s > 0 for s in slacks.values())
    return SecondaryConeWitness(T, lam, slacks)


def cone_samples(
    T: Triangulation, n: int, seed: int = 0
) -> list[tuple[Fraction, ...]]:
    """n interior points of the secondary cone with randomized slack
    profiles, so repeated calls explore different edge-length regimes."""
    import random

    rng = random.Random(seed)
    funcs = list(cone_functionals(T).values())
    out = []
    for _ in range(n):
        targets = [Fraction(rng.randint(1, 60)) for _ in funcs]
        ncols = 2 * NUM_POINTS + 1
        t_col = 2 * NUM_POINTS
        A: list[list[Fraction]] = []
        b: list[Fraction] = []
        for f, r in zip(funcs, targets):
            row = [ZERO] * ncols
            for s in range(NUM_POINTS):
                row[s] = Fraction(-f[s])
                row[NUM_POINTS + s] = Fraction(f[s])
            row[t_col] = r
            A.append(row)  # r*t - f(lam) <= 0
            b.append(ZERO)
        row = [ZERO] * ncols
        row[t_col] = ONE
        A.append(row)
        b.append(ONE)
        c = [ZERO] * ncols
        c[t_col] = ONE
        value, x = _simplex_max(A, b, c)
        if value <= 0:
            raise ValueError("triangulation is not regular")
        lam = tuple(
            (x[s] - x[NUM_POINTS + s]) / value for s in range(NUM_POINTS)
        )
        out.append(lam)
    return out


# ---------------------------------------------------------------------------
# c-genericity of the unique (C)-configuration
# ---------------------------------------------------------------------------

# The only curve vertex that can carry three bounded edges of directions
# -e1, -e2, e1+e2 is the one dual to the central triangle
# {(1,1), (2,1), (1,2)}: any unimodular triangle {(a,b),(a+1,b),(a,b+1)}
# needs a >= 1, b >= 1 and a+b <= 2 for all three of its edges to be
# interior to the polygon.
CENTRAL_TRIANGLE = (4, 7, 8)  # serials of (1,1), (2,1), (1,2)
CENTRAL_EDGES = ((4, 7), (4, 8), (7, 8))


def c_genericity_flag(T: Triangulation, witness: SecondaryConeWitness) -> bool:
    """True if some height vector in the secondary cone gives the
    (C)-configuration a unique shortest edge; False (c-degenerate) when
    none does.

    The three edge lengths are linear functionals of the heights. On a
    full-dimensional cone the shortest is non-unique everywhere only if
    (a) two functionals coincide identically, and (b) the remaining one
    cannot be made strictly smaller than them anywhere in the cone
    (an exact LP feasibility question)."""
    from .curve import length_functional

    if CENTRAL_TRIANGLE not in set(T.triangles):
        return True
    ref_c = witness.interior_point  # max-plus coefficients = lambda
    funcs = [length_functional(T, e, ref_c) for e in CENTRAL_EDGES]
    pairs = [
        (i, j) for i in range(3) for j in range(i + 1, 3)
        if funcs[i] == funcs[j]
    ]
    if not pairs:
        return True
    if len(pairs) > 1:  # all three lengths identical on the whole cone
        return False
    i, j = pairs[0]
    k = 3 - i - j
    # generic iff some cone point makes edge k strictly shorter than the
    # coinciding pair: folds > 0 and funcs[i] - funcs[k] > 0
    gap = tuple(a - b for a, b in zip(funcs[i], funcs[k]))
    cone = list(cone_functionals(T).values())
    value, _ = _strict_cone_point(cone + [gap])
    return value > 0
