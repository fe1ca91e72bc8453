from pathlib import Path as FilePath
from xml.etree import ElementTree

from bridgecluster.arith import Ratio, cf_expand
from bridgecluster.knot import seifert_path
from bridgecluster.paths import enumerate_paths
from bridgecluster.svg import render
from bridgecluster.triangle import build

GOLDEN = FilePath(__file__).parent / "golden"
NS = "{http://www.w3.org/2000/svg}"


def at_of(p, q):
    return build(cf_expand(Ratio(p, q)))


def test_one_triangle_matches_golden_file():
    assert render(at_of(1, 2)) == (GOLDEN / "triangle_1_2.svg").read_text()


def test_seifert_overlay_matches_golden_file():
    at = at_of(7, 19)
    assert render(at, seifert=seifert_path(at)) == (GOLDEN / "triangle_7_19_seifert.svg").read_text()


def test_output_is_well_formed_and_complete():
    at = at_of(7, 19)
    root = ElementTree.fromstring(render(at, path=enumerate_paths(at)[0]))
    assert root.get("version") == "1.1"
    assert len(root.findall(f".//{NS}polygon")) == 6
    labels = [t.text for t in root.find(f"{NS}g[@id='labels']")]
    assert sorted(labels) == sorted(str(v.label) for v in at.vertices)
    assert root.find(f"{NS}g[@id='path']") is not None
    assert root.find(f"{NS}g[@id='seifert-path']") is None


def test_seifert_edges_are_marked():
    at = at_of(7, 19)
    root = ElementTree.fromstring(render(at, seifert=seifert_path(at)))
    edges = [line.get("data-edge") for line in root.find(f"{NS}g[@id='seifert-path']")]
    assert edges == ["7/19-3/8", "3/8-1/3", "1/3-1/2", "1/2-1/1"]


def test_rendering_is_deterministic():
    at = at_of(13, 34)
    assert render(at) == render(build(cf_expand(Ratio(13, 34))))
