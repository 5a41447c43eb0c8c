"""Lattice points of the dilated simplex, the S3 action and sign vectors.

The ambient polygon is the fourth dilation of the standard 2-simplex,
with 15 lattice points. Points are addressed either as coordinate pairs
(i, j) or by a fixed serial index 0..14 following the monomial order of
a degree-4 polynomial written out row by row:

    a00, a10, a01, a20, a11, a02, a30, a21, a12, a03,
    a40, a31, a22, a13, a04
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

DEGREE = 4

#: the 15 lattice points in serial order
POINTS: tuple[tuple[int, int], ...] = (
    (0, 0),
    (1, 0), (0, 1),
    (2, 0), (1, 1), (0, 2),
    (3, 0), (2, 1), (1, 2), (0, 3),
    (4, 0), (3, 1), (2, 2), (1, 3), (0, 4),
)

POINT_INDEX: dict[tuple[int, int], int] = {p: s for s, p in enumerate(POINTS)}

NUM_POINTS = len(POINTS)


def is_lattice_point(i: int, j: int) -> bool:
    return i >= 0 and j >= 0 and i + j <= DEGREE


@dataclass(frozen=True)
class S3Element:
    """A permutation of the three homogenizing coordinates.

    ``perm`` sends coordinate slot a to slot perm[a]; a point (i, j) is
    interpreted as the triple (i, j, 4-i-j) and the triple is reshuffled
    accordingly.
    """

    perm: tuple[int, int, int]
    name: str

    def apply_point(self, p: tuple[int, int]) -> tuple[int, int]:
        i, j = p
        t = (i, j, DEGREE - i - j)
        out = [0, 0, 0]
        for a in range(3):
            out[self.perm[a]] = t[a]
        return (out[0], out[1])

    def compose(self, other: "S3Element") -> "S3Element":
        """self after other: (self*other)(p) = self(other(p))."""
        perm = tuple(self.perm[other.perm[a]] for a in range(3))
        return _BY_PERM[perm]

    def inverse(self) -> "S3Element":
        inv = [0, 0, 0]
        for a in range(3):
            inv[self.perm[a]] = a
        return _BY_PERM[tuple(inv)]

    def __repr__(self) -> str:
        return f"S3({self.name})"


def _make_group() -> tuple[S3Element, ...]:
    names = {
        (0, 1, 2): "e",
        (1, 0, 2): "(xy)",
        (2, 1, 0): "(xz)",
        (0, 2, 1): "(yz)",
        # cycles: (xyz) sends x->y->z->x, i.e. slot 0 -> slot 1 etc.
        (1, 2, 0): "(xyz)",
        (2, 0, 1): "(xzy)",
    }
    return tuple(S3Element(p, n) for p, n in names.items())


S3: tuple[S3Element, ...] = _make_group()
_BY_PERM: dict[tuple[int, int, int], S3Element] = {g.perm: g for g in S3}
S3_BY_NAME: dict[str, S3Element] = {g.name: g for g in S3}

IDENTITY = S3_BY_NAME["e"]
XY = S3_BY_NAME["(xy)"]
XZ = S3_BY_NAME["(xz)"]
YZ = S3_BY_NAME["(yz)"]


def apply_s3(sigma: S3Element, p: tuple[int, int]) -> tuple[int, int]:
    """Image of a lattice point under the symmetry."""
    q = sigma.apply_point(p)
    if not is_lattice_point(*q):
        raise ValueError(f"{p} maps outside the polygon (bug)")
    return q


@lru_cache(maxsize=None)
def serial_permutation(sigma: S3Element) -> tuple[int, ...]:
    """perm[s] = serial index of the image of point s."""
    return tuple(POINT_INDEX[apply_s3(sigma, p)] for p in POINTS)


# ---------------------------------------------------------------------------
# sign vectors
# ---------------------------------------------------------------------------
# A sign vector is stored as a 15-bit mask: bit s set <=> sign -1 at serial s.

ALL_PLUS = 0
NUM_SIGN_VECTORS = 1 << NUM_POINTS


def sign_at(mask: int, serial: int) -> int:
    return -1 if (mask >> serial) & 1 else 1


def s3_act_signs(sigma: S3Element, mask: int) -> int:
    """(sigma . s)_p = s_{sigma^{-1}(p)}."""
    perm = serial_permutation(sigma)
    out = 0
    for s in range(NUM_POINTS):
        if (mask >> s) & 1:
            out |= 1 << perm[s]
    return out


def parse_signs(text: str) -> int:
    """Parse a 15-character string of '+'/'-' in serial order."""
    text = text.strip()
    if len(text) != NUM_POINTS or any(c not in "+-" for c in text):
        raise ValueError(f"expected 15 characters of '+'/'-', got {text!r}")
    mask = 0
    for s, c in enumerate(text):
        if c == "-":
            mask |= 1 << s
    return mask


def format_signs(mask: int) -> str:
    return "".join("-" if (mask >> s) & 1 else "+" for s in range(NUM_POINTS))
