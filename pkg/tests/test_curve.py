from fractions import Fraction

import pytest

from tropquartic.curve import (
    build_curve,
    dual_subdivision,
    edge_direction,
    format_heights,
    parse_heights,
)
from tropquartic.triangulation import validate

# three height vectors known to share one dual triangulation while the
# curve's edge lengths differ (a 6.5 / 6 / 5.5 tweak of one coefficient)
H1 = "0 5 5 9 8 5 6.5 9 9 4 2 7 8 7 1"
H2 = "0 5 5 9 8 5 6 9 9 4 2 7 8 7 1"
H3 = "0 5 5 9 8 5 5.5 9 9 4 1 7 8 7 1"


def _h(text):
    return parse_heights("\n".join(text.split()))


def test_parse_heights_round_trip():
    h = _h(H1)
    assert h[6] == Fraction(13, 2)
    assert parse_heights(format_heights(h)) == h
    with pytest.raises(ValueError):
        parse_heights("1\n2\n3")
    with pytest.raises(ValueError):
        parse_heights("\n".join(["x"] * 15))


def test_shared_dual_triangulation():
    Ts = [dual_subdivision(_h(t)) for t in (H1, H2, H3)]
    assert Ts[0] is not None
    assert validate(Ts[0]) is None
    assert Ts[0] == Ts[1] == Ts[2]


def test_smooth_curve_structure():
    curve = build_curve(_h(H1))
    # a smooth quartic: 16 trivalent vertices, 18 bounded edges, 12 rays
    assert len(curve.vertices) == 16
    assert len(curve.bounded_edges) == 18
    assert len(curve.rays) == 12
    for e in curve.bounded_edges:
        d = edge_direction(curve, e)
        assert d != (0, 0)


def test_degenerate_heights_rejected():
    # affine heights lift to a plane: no subdivision into triangles
    flat = tuple(Fraction(0) for _ in range(15))
    assert dual_subdivision(flat) is None
