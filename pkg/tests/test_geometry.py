import re
import xml.etree.ElementTree as ET

import pytest

from circwords.christoffel import Slope, christoffel, coprime_pairs
from circwords.geometry import LatticePath, PlaneSpec, path2d, path3d, plane_power, project_to_diagonal
from circwords.svg import svg_necklace, svg_path
from circwords.ternary import phi
from circwords.words import CircularWord

SVG = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("m, n, expected", [(4, 3, "0120212"), (1, 1, "0212"), (2, 1, "012")])
def test_path3d_words(m, n, expected):
    _, word = path3d(PlaneSpec(m, n))
    assert str(word) == expected


def test_path3d_is_phi_of_the_christoffel_power():
    # the m=2,n=1 walk reads phi(C(2,1)) = phi(001)
    assert str(path3d(PlaneSpec(2, 1))[1]) == str(phi(christoffel(Slope(2, 1))))


def test_plane_spec_validation():
    with pytest.raises(ValueError):
        PlaneSpec(2, 4)
    with pytest.raises(ValueError):
        PlaneSpec(0, 1)


def test_path3d_stays_below_plane_and_stops_on_it():
    for m, n in coprime_pairs(20):
        path, word = path3d(PlaneSpec(m, n))
        for x, y, z in path.points():
            assert z * m <= n * (x + y)
        x, y, z = path.end
        assert x == y and z * m == n * (x + y)
        # no earlier point qualifies
        assert [p for p in path.points()[1:] if p[0] == p[1] and p[2] * m == n * (p[0] + p[1])] == [path.end]
        assert len(word) == plane_power(m) * (m + n)


def test_projection_examples():
    path, _ = path3d(PlaneSpec(4, 3))
    assert project_to_diagonal(path) == path2d(Slope(4, 3))
    path, _ = path3d(PlaneSpec(1, 1))
    assert str(project_to_diagonal(path).word()) == "0101"
    assert project_to_diagonal(LatticePath(3, ())) == LatticePath(2, ())
    with pytest.raises(ValueError):
        project_to_diagonal(path2d(Slope(1, 1)))


def test_projection_preserves_heights():
    path, _ = path3d(PlaneSpec(3, 5))
    proj = project_to_diagonal(path)
    assert [p[2] for p in path.points()] == [p[1] for p in proj.points()]
    assert [p[0] + p[1] for p in path.points()] == [p[0] for p in proj.points()]


@pytest.mark.parametrize("s, steps", [((2, 3), (0, 1, 0, 1, 1)), ((1, 1), (0, 1)), ((2, 1), (0, 0, 1))])
def test_path2d(s, steps):
    assert path2d(Slope(*s)).steps == steps


def test_lattice_path_validation():
    with pytest.raises(ValueError):
        LatticePath(2, (0, 2))
    with pytest.raises(ValueError):
        LatticePath(4, ())


def test_svg_path_2d_structure():
    doc = svg_path(path2d(Slope(2, 3)), slope=(2, 3))
    root = ET.fromstring(doc)
    lines = root.findall(f"{SVG}line")
    steps = [l for l in lines if "step" in l.get("class").split()]
    guides = [l for l in lines if l.get("class") == "guide"]
    assert len(steps) == 5 and len(guides) == 1
    # guide runs from the origin to the end point (2, 3)
    g = guides[0]
    first, last = steps[0], steps[-1]
    assert (g.get("x1"), g.get("y1")) == (first.get("x1"), first.get("y1"))
    assert (g.get("x2"), g.get("y2")) == (last.get("x2"), last.get("y2"))


def test_svg_path_3d_colours():
    path, _ = path3d(PlaneSpec(4, 3))
    root = ET.fromstring(svg_path(path))
    classes = [l.get("class") for l in root.findall(f"{SVG}line")]
    assert classes == [f"step step-{s}" for s in path.steps]


def _polygons(doc):
    return ET.fromstring(doc).findall(f"{SVG}polygon")


def test_svg_necklace_polygons():
    polys = _polygons(svg_necklace(CircularWord.of("0102010")))
    assert [p.get("class") for p in polys] == ["letter letter-0", "letter letter-1", "letter letter-2"]
    assert [len(p.get("points").split()) for p in polys] == [4, 2, 1]
    polys = _polygons(svg_necklace(CircularWord.of("012")))
    assert len(polys) == 3 and all(len(p.get("points").split()) == 1 for p in polys)


def test_svg_is_deterministic():
    a = svg_necklace(CircularWord.of("0120212"))
    assert a == svg_necklace(CircularWord.of("0212012"))
    assert re.match(r'<\?xml version="1.0" encoding="UTF-8"\?>', a)
