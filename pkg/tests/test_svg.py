from xml.etree import ElementTree as ET

from tropquartic.classes import bitangent_classes
from tropquartic.curve import build_curve, parse_heights
from tropquartic.svg import render_svg

H1 = "\n".join("0 5 5 9 8 5 6.5 9 9 4 2 7 8 7 1".split())


def test_render_is_well_formed_svg():
    curve = build_curve(parse_heights(H1))
    text = render_svg(curve, bitangent_classes(curve))
    root = ET.fromstring(text)
    assert root.tag.endswith("svg")
    lines = root.findall(".//{http://www.w3.org/2000/svg}line")
    # 18 bounded edges + 12 rays + 3 dashed rays per class sample
    assert len(lines) >= 30
