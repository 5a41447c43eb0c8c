import itertools

import numpy as np
from hypothesis import given, strategies as st

from tropquartic.lattice import (
    NUM_SIGN_VECTORS,
    S3,
    S3_BY_NAME,
    parse_signs,
)
from tropquartic.lifting import (
    CLASS_SHAPES,
    DEFORMATION_CLASSES,
    class_c_frame_conditions,
    condition,
    equivalent,
    satisfied_all,
    shape_conditions,
    transport,
)


def test_condition_parity_semantics():
    c = condition(-1, (0, 0, 1), (1, 1, 2), (2, 2, 3))
    # even exponents drop out; s00 * s22 must be negative
    assert c.holds(parse_signs("-++++++++++++++"))
    assert not c.holds(parse_signs("+++++++++++++++"))
    assert not c.holds(parse_signs("-+++++++++++-++"))  # s00, s22 both -1


def test_single_condition_cuts_half_the_cube():
    c = condition(1, (1, 1, 1), (2, 2, 1))
    assert int(satisfied_all((c,)).sum()) == NUM_SIGN_VECTORS // 2


def test_trivial_condition_set():
    assert int(satisfied_all(()).sum()) == NUM_SIGN_VECTORS
    # a condition with empty mask and positive sign always holds
    assert satisfied_all((condition(1, (0, 0, 2)),)).all()


@given(st.sampled_from(range(6)), st.sampled_from(range(6)))
def test_transport_is_an_action(a, b):
    c = condition(-1, (0, 2, 1), (2, 1, 1), (4, 0, 1))
    ga, gb = S3[a], S3[b]
    lhs = transport(transport(c, gb), ga)
    rhs = transport(c, ga.compose(gb))
    assert lhs == rhs


def test_transport_by_identity_is_identity():
    c = condition(1, (1, 1, 1))
    assert transport(c, S3_BY_NAME["e"]) == c


def test_all_shapes_have_condition_rows():
    no_condition = set("W X Y Z AA BB CC DD EE FF GG HH II".split())
    for shapes in CLASS_SHAPES.values():
        for shape in shapes:
            base = shape.split("|")[0]
            conds = shape_conditions(base, {"v": 0, "i": 1, "u": 0,
                                            "j": 1, "k": 1})
            assert isinstance(conds, tuple)
            if base in no_condition:
                assert conds == ()


def test_deformation_class_catalog_size():
    assert len(DEFORMATION_CLASSES) == 24


def test_central_class_frame_independence():
    """The conditions of a central-triangle class do not depend on the
    ordering frame used to evaluate them."""
    frames = [S3_BY_NAME[n] for n in ("e", "(xy)", "(xz)")]
    for i, j, k in itertools.product((0, 1, 2, 3, 4), repeat=3):
        ref = class_c_frame_conditions(i, j, k, frames[0])
        for f in frames[1:]:
            assert equivalent(ref, class_c_frame_conditions(i, j, k, f))


def test_point_class_conditions_match_known_row():
    # vertex-off-curve class anchored at red edge v=0, green edge u=0:
    # (-s10 s11)^i s0i s22 > 0 and (-s01 s11)^j sj0 s22 > 0
    conds = shape_conditions("A", {"v": 0, "i": 1, "u": 0, "j": 1})
    assert len(conds) == 2
    want0 = condition(-1, (1, 0, 1), (1, 1, 1), (0, 1, 1), (2, 2, 1))
    assert any(c == want0 for c in conds)
