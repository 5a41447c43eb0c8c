from fractions import Fraction

from tropquartic.classes import bitangent_classes
from tropquartic.curve import build_curve, parse_heights
from tropquartic.intersect import is_bitangent, stable_intersection

H1 = "\n".join("0 5 5 9 8 5 6.5 9 9 4 2 7 8 7 1".split())


def test_seven_bitangent_classes():
    curve = build_curve(parse_heights(H1))
    classes = bitangent_classes(curve)
    assert len(classes) == 7


def test_class_samples_are_bitangent():
    curve = build_curve(parse_heights(H1))
    for B in bitangent_classes(curve):
        for cell in B.cells:
            assert is_bitangent(cell.sample, curve)


def test_stable_intersection_multiplicity_is_degree():
    curve = build_curve(parse_heights(H1))
    for B in bitangent_classes(curve):
        q = B.cells[0].sample
        comps = stable_intersection(q, curve)
        assert sum(c.multiplicity for c in comps) == 4


def test_generic_line_meets_curve_in_four_points():
    curve = build_curve(parse_heights(H1))
    q = (Fraction(-1000), Fraction(-2001, 2))
    comps = [c for c in stable_intersection(q, curve) if c.multiplicity]
    assert sum(c.multiplicity for c in comps) == 4
    assert all(c.multiplicity == 1 for c in comps)
