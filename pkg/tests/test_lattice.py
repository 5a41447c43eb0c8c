import pytest
from hypothesis import given, strategies as st

from tropquartic.lattice import (
    ALL_PLUS,
    IDENTITY,
    NUM_POINTS,
    NUM_SIGN_VECTORS,
    POINT_INDEX,
    POINTS,
    S3,
    S3_BY_NAME,
    apply_s3,
    format_signs,
    parse_signs,
    s3_act_signs,
    serial_permutation,
    sign_at,
)


def test_points_serial_order():
    assert NUM_POINTS == 15
    assert POINTS[0] == (0, 0)
    assert POINTS[4] == (1, 1)
    assert POINTS[14] == (0, 4)
    assert all(POINT_INDEX[p] == s for s, p in enumerate(POINTS))


def test_group_structure():
    assert len(S3) == 6
    names = {g.name for g in S3}
    assert names == {"e", "(xy)", "(xz)", "(yz)", "(xyz)", "(xzy)"}
    for g in S3:
        assert g.compose(g.inverse()).perm == IDENTITY.perm


def test_transpositions_on_points():
    xy = S3_BY_NAME["(xy)"]
    assert apply_s3(xy, (3, 1)) == (1, 3)
    xz = S3_BY_NAME["(xz)"]
    assert apply_s3(xz, (1, 1)) == (2, 1)
    yz = S3_BY_NAME["(yz)"]
    assert apply_s3(yz, (1, 1)) == (1, 2)


@given(st.sampled_from(range(6)), st.sampled_from(range(6)))
def test_serial_permutation_is_homomorphism(a, b):
    ga, gb = S3[a], S3[b]
    pa = serial_permutation(ga)
    pb = serial_permutation(gb)
    pc = serial_permutation(ga.compose(gb))
    composed = tuple(pa[pb[s]] for s in range(NUM_POINTS))
    assert composed == pc


def test_sign_round_trip():
    text = "+-+-+-+-+-+-+-+"
    assert format_signs(parse_signs(text)) == text
    assert parse_signs("+" * 15) == ALL_PLUS
    assert sign_at(parse_signs("-" + "+" * 14), 0) == -1


def test_parse_signs_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_signs("+" * 14)
    with pytest.raises(ValueError):
        parse_signs("+0" + "+" * 13)


@given(st.integers(0, NUM_SIGN_VECTORS - 1), st.sampled_from(range(6)))
def test_sign_action_compatible_with_points(mask, gi):
    g = S3[gi]
    acted = s3_act_signs(g, mask)
    perm = serial_permutation(g)
    for s in range(NUM_POINTS):
        assert sign_at(acted, perm[s]) == sign_at(mask, s)
