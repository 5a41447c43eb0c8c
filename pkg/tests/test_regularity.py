from fractions import Fraction

from tropquartic.regularity import (
    cone_functionals,
    fold_functional,
    is_regular,
    c_genericity_flag,
)
from tropquartic.triangulation import flips, staircase


def test_staircase_is_regular_with_strict_witness():
    T = staircase()
    w = is_regular(T)
    assert w is not None
    assert all(v > 0 for v in w.slacks.values())


def test_fold_functionals_vanish_on_affine_heights():
    """Every fold functional kills heights that are affine in (i, j)."""
    T = staircase()
    from tropquartic.lattice import POINTS

    for a, b, c in ((1, 0, 0), (0, 1, 0), (3, -2, 7)):
        h = [Fraction(a * i + b * j + c) for (i, j) in POINTS]
        for e, f in cone_functionals(T).items():
            assert sum(fi * hi for fi, hi in zip(f, h)) == 0
            # cone functionals are fold functionals on the valuation scale
            assert fold_functional(T, e) == tuple(-x for x in f)


def test_witness_heights_reproduce_triangulation():
    from tropquartic.curve import dual_subdivision

    T = staircase()
    w = is_regular(T)
    assert dual_subdivision(w.interior_point) == T


def test_neighbours_of_staircase_are_regular():
    T = staircase()
    for _, T2 in flips(T)[:5]:
        assert is_regular(T2) is not None


def test_c_genericity_flag_runs():
    T = staircase()
    w = is_regular(T)
    assert isinstance(c_genericity_flag(T, w), bool)
