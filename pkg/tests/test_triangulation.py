import pytest
from hypothesis import given, settings, strategies as st

from tropquartic.lattice import S3
from tropquartic.triangulation import (
    Triangulation,
    apply_s3_triangulation,
    canonical_form,
    flip,
    flips,
    from_text,
    is_flippable,
    orbit,
    staircase,
    to_text,
    validate,
)


def test_staircase_is_valid():
    T = staircase()
    assert len(T.triangles) == 16
    assert validate(T) is None


def test_text_round_trip():
    T = staircase()
    assert from_text(to_text(T)) == T


def test_from_text_rejects_garbage():
    with pytest.raises(ValueError):
        from_text("not a triangulation")
    with pytest.raises(ValueError):
        from_text("0,0 1,0 9,9\n")  # not a lattice point
    T = staircase()
    lines = to_text(T).splitlines()
    # structural problems are reported by validate, not the parser
    assert validate(from_text("\n".join(lines[:-1]))) is not None


def test_flip_is_involutive():
    T = staircase()
    found = False
    for e, T2 in flips(T):
        assert validate(T2) is None
        assert T2 != T
        # flipping the new diagonal restores the original
        old = set(T.triangles) - set(T2.triangles)
        new = set(T2.triangles) - set(T.triangles)
        assert len(old) == len(new) == 2
        (a, b) = sorted(set(new.pop()) & set(new.pop()))
        assert flip(T2, (a, b)) == T
        found = True
    assert found


def test_is_flippable_rejects_boundary_and_missing_edges():
    T = staircase()
    assert not is_flippable(T, (0, 1))  # boundary edge of the polygon
    assert not is_flippable(T, (0, 14))  # not an edge at all


def test_s3_orbit_sizes_divide_six():
    T = staircase()
    assert len(orbit(T)) in (1, 2, 3, 6)
    for sigma in S3:
        img = apply_s3_triangulation(sigma, T)
        assert validate(img) is None


def test_canonical_form_is_orbit_invariant():
    T = staircase()
    C, _ = canonical_form(T)
    for sigma in S3:
        C2, _ = canonical_form(apply_s3_triangulation(sigma, T))
        assert C2 == C


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 10 ** 6), min_size=6, max_size=6))
def test_random_flip_walk_stays_unimodular(seeds):
    T = staircase()
    for s in seeds:
        options = flips(T)
        e, T = options[s % len(options)]
        assert validate(T) is None
