"""Real lifting conditions of bitangent classes as sign conditions.

A condition is "(+/-1) * product of coefficient signs > 0"; only the
parity of each exponent matters, so a condition is a 15-bit mask plus a
global sign. Two catalogs are provided: per-shape conditions (each of
the 41 bitangent shapes) and per-deformation-class conditions (each of
the 24 deformation classes). Both are written for class representatives
in the identity position; `transport` moves a condition to any other
S3-position of the class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import (
    NUM_POINTS,
    NUM_SIGN_VECTORS,
    POINT_INDEX,
    S3Element,
    serial_permutation,
)


def _serial(i: int, j: int) -> int:
    return POINT_INDEX[(i, j)]


# parity of popcount for every 15-bit mask (shared lookup table)
_PARITY = np.zeros(NUM_SIGN_VECTORS, dtype=np.uint8)
for _b in range(15):
    _PARITY[(np.arange(NUM_SIGN_VECTORS) >> _b) & 1 == 1] ^= 1


@dataclass(frozen=True)
class SignCondition:
    """sign * prod_{s in mask} s_s > 0 (mask = serials with odd exponent)."""

    mask: int
    neg: bool  # True: the product must be negative... i.e. leading -1

    def holds(self, signs_mask: int) -> bool:
        """signs_mask: bit s set <=> coefficient sign at serial s is -1."""
        par = bin(self.mask & signs_mask).count("1") & 1
        return (par == 1) == self.neg

    def holds_all(self) -> np.ndarray:
        """Boolean array over all 2^15 sign vectors."""
        par = _PARITY[np.arange(NUM_SIGN_VECTORS) & self.mask]
        return (par == 1) == self.neg


def condition(sign: int, *factors: tuple[int, int, int]) -> SignCondition:
    """Build a condition from (i, j, exponent) monomial factors."""
    mask = 0
    for i, j, e in factors:
        if e % 2:
            mask ^= 1 << _serial(i, j)
    return SignCondition(mask, sign < 0)


def transport(cond: SignCondition, sigma: S3Element) -> SignCondition:
    """The same condition for the sigma-image of the configuration: the
    coefficient subscripts move along with the lattice points."""
    perm = serial_permutation(sigma)
    mask = 0
    for s in range(NUM_POINTS):
        if cond.mask >> s & 1:
            mask |= 1 << perm[s]
    return SignCondition(mask, cond.neg)


ConditionSet = tuple[SignCondition, ...]

def substitute_params(sigma: S3Element, i: int, j: int, k: int):
    """(i, j, k) parameters of the sigma-image of a configuration with
    boundary anchors p_{0i}, p_{j0}, p_{k,4-k}.

    sigma permutes the three boundary edges of the triangle; the image of
    the left-edge anchor p_{0i} fills the parameter slot of whichever
    boundary edge the left edge lands on (and likewise for the bottom
    edge and the hypotenuse). Corner anchors inherit the slot from the
    edge, and the value is read off along the target edge: left edge
    point p_{0t} and bottom p_{t0} and hypotenuse p_{t,4-t} all have
    parameter t.
    """
    from .lattice import POINTS

    perm = serial_permutation(sigma)
    out = {}
    # (probe point on the source edge, anchor point on the source edge)
    anchors = (
        ((0, 1), (0, i)),   # left edge, parameter i
        ((1, 0), (j, 0)),   # bottom edge, parameter j
        ((1, 3), (k, 4 - k)),  # hypotenuse, parameter k
    )
    for probe, anchor in anchors:
        px, py = POINTS[perm[_serial(*probe)]]
        ax, ay = POINTS[perm[_serial(*anchor)]]
        if px == 0:
            out["i"] = ay
        elif py == 0:
            out["j"] = ax
        else:
            out["k"] = ax
    return out["i"], out["j"], out["k"]


def class_c_frame_conditions(i: int, j: int, k: int,
                             frame: S3Element) -> ConditionSet:
    """Conditions of a central-triangle class computed in an arbitrary
    ordering frame: substitute the frame-image parameters into the
    identity-position row, then move the coefficient subscripts back
    through the frame (subscripts move, exponents do not)."""
    ti, tj, tk = substitute_params(frame, i, j, k)
    conds = shape_conditions("C", {"i": ti, "j": tj, "k": tk})
    inv = frame.inverse()
    return tuple(transport(c, inv) for c in conds)


def satisfied_all(conds: ConditionSet) -> np.ndarray:
    out = np.ones(NUM_SIGN_VECTORS, dtype=bool)
    for c in conds:
        out &= c.holds_all()
    return out


def equivalent(a: ConditionSet, b: ConditionSet) -> bool:
    """Same satisfied set over all 2^15 sign vectors."""
    return bool(np.array_equal(satisfied_all(a), satisfied_all(b)))


# ---------------------------------------------------------------------------
# per-shape conditions (identity position)
# ---------------------------------------------------------------------------
# Bindings: v (red edge {p_{1v}, p_{1,v+1}}), i (apex p_{0i}),
# u (green edge {p_{u1}, p_{u+1,1}}), j (apex p_{j0}),
# k (hypotenuse point p_{k,4-k}).


def _red(v: int, e: int) -> list[tuple[int, int, int]]:
    return [(1, v, e), (1, v + 1, e)]


def shape_conditions(shape: str, b: dict) -> ConditionSet:
    """Lifting conditions of one bitangent shape in identity position."""
    v, i, u, j, k = (b.get(x) for x in ("v", "i", "u", "j", "k"))
    if shape == "A":
        return (
            condition((-1) ** i, *_red(v, i), (0, i, 1), (2, 2, 1)),
            condition((-1) ** j, (u, 1, j), (u + 1, 1, j), (j, 0, 1), (2, 2, 1)),
        )
    if shape == "B":
        return (
            condition((-1) ** (i + 1), *_red(v, i + 1), (0, i, 1), (2, 1, 1)),
            condition((-1) ** (j + 1), (2, 1, j + 1), (3, 1, j), *_red(v, 1),
                      (j, 0, 1)),
        )
    if shape == "C":
        if j % 2 == 0:
            return (
                condition((-1) ** i, (1, 1, i), (1, 2, i), (0, i, 1), (j, 0, 1)),
                condition((-1) ** k, (2, 1, k), (1, 2, k), (k, 4 - k, 1),
                          (j, 0, 1)),
            )
        return (
            condition((-1) ** (i + 1), (1, 1, i + 1), (1, 2, i), (2, 1, 1),
                      (0, i, 1), (j, 0, 1)),
            condition((-1) ** (k + 1), (2, 1, k + 1), (1, 2, k), (1, 1, 1),
                      (k, 4 - k, 1), (j, 0, 1)),
        )
    if shape in ("H", "H'"):
        return (
            condition((-1) ** (i + 1), *_red(v, i + 1), (0, i, 1), (2, 1, 1)),
            condition(-1, (2, 1, 1), *_red(v, 1), (4, 0, 1)),
        )
    if shape == "M":
        return (
            condition((-1) ** (i + 1), *_red(v, i + 1), (0, i, 1), (2, 1, 1)),
            condition(1, (3, 1, 1), *_red(v, 1), (3, 0, 1)),
        )
    if shape == "D":
        return (condition((-1) ** i, (1, 0, i), (1, 1, i), (0, i, 1), (2, 2, 1)),)
    if shape in ("E", "F", "J"):
        return (condition((-1) ** (i + 1), *_red(v, i + 1), (0, i, 1), (2, 0, 1)),)
    if shape == "G":
        return (condition((-1) ** i, (1, 0, i), (1, 1, i), (0, i, 1),
                          (k, 4 - k, 1)),)
    if shape in ("I", "N"):
        return (condition(-1, (1, 0, 1), (1, 1, 1), (0, 1, 1), (k, 4 - k, 1)),)
    if shape in ("K", "T", "T'", "T''", "U", "U'", "V"):
        return (condition(1, (0, 0, 1), (k, 4 - k, 1)),)
    if shape in ("L", "O", "P"):
        return (condition(-1, (1, 0, 1), (1, 1, 1), (0, 1, 1), (2, 2, 1)),)
    if shape in ("L'", "Q", "Q'", "R", "S"):
        return (condition(1, (0, 0, 1), (2, 2, 1)),)
    if shape in ("W", "X", "Y", "Z", "AA", "BB", "CC", "DD", "EE", "FF",
                 "GG", "HH", "II"):
        return ()
    raise KeyError(f"unknown shape {shape!r}")


# ---------------------------------------------------------------------------
# per-deformation-class conditions (identity position)
# ---------------------------------------------------------------------------

# shape sets of the deformation classes; suffixed entries are S3-images
# of shapes occurring inside the class
CLASS_SHAPES: dict[str, tuple[str, ...]] = {
    "(A)": ("A",),
    "(B H' H)": ("B", "H'", "H"),
    "(B H' H)+(yz)": ("B", "H'", "H", "H'|(yz)", "B|(yz)"),
    "(B M)+(yz)": ("B", "M", "B|(yz)"),
    "(B)": ("B",),
    "(C)": ("C",),
    "(D)": ("D",),
    "(D L O)": ("D", "L", "O"),
    "(D L' Q)": ("D", "L'", "Q"),
    "(D L' Q Q' R)": ("D", "L'", "Q", "Q'", "R"),
    "(E)": ("E",),
    "(E F J)": ("E", "F", "J"),
    "(G)": ("G",),
    "(G I N)+(xy)": ("G", "I", "N", "I|(xy)", "G|(xy)"),
    "(G K U T T')": ("G", "K", "U", "T'", "T"),
    "(G K U U' T T' T'' V)+(xy)": (
        "G", "K", "U", "U'", "T'", "T''", "T", "V",
        "T'|(xy)", "U'|(xy)", "U|(xy)", "K|(xy)", "G|(xy)",
    ),
    "(H)": ("H",),
    "(II)": ("II",),
    "(P)": ("P",),
    "(S)": ("S",),
    "(T)": ("T",),
    "(W)": ("W",),
    "(W X Y EE GG)": ("W", "X|(xz)", "Y|(xz)", "EE", "GG"),
    "(W X Y Z AA BB CC DD EE FF GG HH)+(xz)": (
        "W", "X", "Y", "Z", "AA", "BB", "CC", "DD", "EE", "FF", "GG", "HH",
        "X|(xz)", "Y|(xz)", "AA|(xz)", "CC|(xz)", "DD|(xz)", "EE|(xz)",
        "FF|(xz)", "GG|(xz)", "HH|(xz)",
    ),
}

DEFORMATION_CLASSES = tuple(sorted(CLASS_SHAPES))


def class_conditions(label: str, b: dict) -> ConditionSet:
    """Lifting conditions of one deformation class, identity position."""
    v, i, u, j, k = (b.get(x) for x in ("v", "i", "u", "j", "k"))
    if label == "(A)":
        return shape_conditions("A", b)
    if label in ("(B H' H)", "(B H' H)+(yz)", "(H)"):
        return shape_conditions("H", b)
    if label == "(B M)+(yz)":
        return shape_conditions("M", b)
    if label == "(B)":
        if j not in (0, 1, 2):
            raise ValueError(f"class (B) requires j in {{0,1,2}}, got {j}")
        return shape_conditions("B", b)
    if label == "(C)":
        return shape_conditions("C", b)
    if label == "(D)":
        if i not in (2, 3, 4):
            raise ValueError(f"class (D) requires i in {{2,3,4}}, got {i}")
        return shape_conditions("D", b)
    if label in ("(D L O)", "(P)"):
        return (condition(-1, (1, 0, 1), (1, 1, 1), (0, 1, 1), (2, 2, 1)),)
    if label in ("(D L' Q)", "(D L' Q Q' R)", "(S)", "(T)"):
        return (condition(1, (0, 0, 1), (2, 2, 1)),)
    if label in ("(E)", "(E F J)"):
        return shape_conditions("E", b)
    if label == "(G)":
        if i not in (2, 3, 4):
            raise ValueError(f"class (G) requires i in {{2,3,4}}, got {i}")
        return shape_conditions("G", b)
    if label == "(G I N)+(xy)":
        return (condition(-1, (1, 0, 1), (1, 1, 1), (0, 1, 1), (k, 4 - k, 1)),)
    if label in ("(G K U T T')", "(G K U U' T T' T'' V)+(xy)"):
        return (condition(1, (0, 0, 1), (k, 4 - k, 1)),)
    if label in ("(W)", "(W X Y EE GG)",
                 "(W X Y Z AA BB CC DD EE FF GG HH)+(xz)", "(II)"):
        return ()
    raise KeyError(f"unknown deformation class {label!r}")
