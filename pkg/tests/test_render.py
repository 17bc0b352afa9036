import random
import xml.etree.ElementTree as ET

from pseudocircles import arrangement as arr
from pseudocircles import constructions as con
from pseudocircles import wiring as wir
from pseudocircles.render import RenderOptions, render_svg
from strategies import random_annular

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg)


def test_base6_shades_eight_triangles():
    root = parse(render_svg(con.base_wiring(6), RenderOptions(shade=True)))
    paths = root.findall(f"{NS}path")
    assert sum(p.get("class") == "triangle" for p in paths) == 8
    assert sum(p.get("class") == "digon" for p in paths) == 0
    assert sum(p.get("class") == "wire" for p in paths) == 6


def test_shading_matches_cell_stats():
    w = random_annular(5, random.Random(2), 0.0)
    s = arr.cell_stats(wir.to_arrangement(w))
    root = parse(render_svg(w, RenderOptions(shade=True)))
    classes = [p.get("class") for p in root.findall(f"{NS}path")]
    assert classes.count("triangle") == s.triangles
    assert classes.count("digon") == s.digons


def test_touch_drawn_as_tangency():
    w = wir.AnnularWiring(2, ((0, arr.TOUCH),))
    root = parse(render_svg(w))
    assert len(root.findall(f"{NS}circle[@class='touch']")) == 1
    wires = [p for p in root.findall(f"{NS}path") if p.get("class") == "wire"]
    assert len(wires) == 2 and all(" Q " in p.get("d") for p in wires)


def test_annular_ticks_linear_none():
    w = con.krupp_wiring()
    assert len(parse(render_svg(w)).findall(f"{NS}line[@class='tick']")) == 2 * 3
    assert parse(render_svg(wir.cut(w, 0))).findall(f"{NS}line[@class='tick']") == []


def test_byte_identical():
    w = con.base_wiring(7)
    o = RenderOptions(shade=True)
    assert render_svg(w, o) == render_svg(w, o)
    assert render_svg(w) != render_svg(w, o)
