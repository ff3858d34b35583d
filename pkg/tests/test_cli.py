import io
import json
import subprocess
import sys
from fractions import Fraction as F
from xml.etree import ElementTree

import pytest

from symiso import cli, fileio
from symiso.polynorm import linf_norm
from symiso.render import render_svg

from conftest import DATA


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_check_wheel():
    code, out, _ = run("check", "--input", str(DATA / "w5.json"))
    assert code == 0
    assert "result: admissible" in out
    assert "tree1:" in out and "tree2:" in out


def test_check_corrupted_action(tmp_path):
    doc = fileio.read_json(DATA / "w5.json")
    doc["action"] = [0, 2, 1, 3, 4]
    code, _, err = run("check", "--input", write(tmp_path, "bad.json", doc))
    assert code == 2
    assert "NotAutomorphism" in err


def test_check_negative_answer():
    code, out, _ = run("check", "--input", str(DATA / "k4_halfturn.json"), "--group", "CsPreserving")
    assert code == 1
    assert "FixedEdgeRule" in out


@pytest.mark.parametrize("argv", [
    ["check"],
    ["check", "--input", "/nonexistent.json"],
    ["nonsense"],
    ["check", "--input", str(DATA / "w5.json"), "--group", "D6"],
    ["place", "--input", str(DATA / "w5.json"), "--norm", "1,0;2,0"],
    ["enumerate"],
])
def test_input_errors(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    assert run("check", "--input", str(path))[0] == 2
    assert run("check", "--input", write(tmp_path, "e.json", {"vertices": 3, "edges": [[0]], "action": [0, 1, 2],
                                                              "group": "C2"}))[0] == 2


def test_reduce_lists_steps():
    code, out, _ = run("reduce", "--input", str(DATA / "halfturn7.json"))
    assert code == 0
    assert "step 1: 0-extension" in out
    assert "steps: 1" in out
    code, out, _ = run("reduce", "--input", str(DATA / "k4_halfturn.json"))
    assert code == 0 and "hat graph" in out
    assert run("reduce", "--input", str(DATA / "mirror_swap6.json"))[0] == 1


@pytest.mark.parametrize("name", ["w5", "mirror_swap6", "halfturn7", "quarterturn8", "k4_halfturn"])
@pytest.mark.parametrize("norm", ["linf", "l1"])
def test_place_then_verify(tmp_path, name, norm):
    out_path = tmp_path / "placed.json"
    code, out, _ = run("place", "--input", str(DATA / f"{name}.json"), "--norm", norm, "--output", str(out_path))
    assert code == 0
    assert "isostatic=True" in out
    code, out, _ = run("verify", "--input", str(out_path))
    assert code == 0
    assert "isostatic: true" in out and "symmetric: yes" in out
    doc = fileio.read_json(out_path)
    assert all("." not in x for xy in doc["coords"] for x in map(str, xy))


def test_verify_without_tau(tmp_path):
    out_path = tmp_path / "placed.json"
    run("place", "--input", str(DATA / "halfturn7.json"), "--output", str(out_path))
    doc = fileio.read_json(out_path)
    del doc["tau"]
    code, out, _ = run("verify", "--input", write(tmp_path, "notau.json", doc))
    assert code == 0 and "symmetric: yes" in out


def test_verify_rejects_broken_placement(tmp_path):
    out_path = tmp_path / "placed.json"
    run("place", "--input", str(DATA / "w5.json"), "--output", str(out_path))
    doc = fileio.read_json(out_path)
    doc["coords"][1] = list(doc["coords"][0])
    doc["coords"][0] = ["1000", "1000"]
    code, out, _ = run("verify", "--input", write(tmp_path, "moved.json", doc))
    assert code == 1
    assert "isostatic: false" in out or "symmetric: no" in out


def test_place_is_deterministic():
    a = run("place", "--input", str(DATA / "quarterturn8.json"))[1]
    b = run("place", "--input", str(DATA / "quarterturn8.json"))[1]
    assert a == b
    assert run("place", "--input", str(DATA / "quarterturn8.json"), "--norm", "1,0;1,1")[0] == 1


def test_enumerate_small():
    code, out, _ = run("enumerate", "--group", "C2", "--max-vertices", "5", "--norm", "l1")
    assert code == 0
    assert "counterexamples 0" in out and "instances 8" in out


def test_render(tmp_path):
    placed = tmp_path / "placed.json"
    run("place", "--input", str(DATA / "w5.json"), "--output", str(placed))
    svg_path = tmp_path / "w5.svg"
    assert run("render", "--input", str(placed), "--output", str(svg_path))[0] == 0
    root = ElementTree.parse(svg_path).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    assert root.get("width") == "800"
    lines = root.findall(f"{ns}line")
    classes = [ln.get("class") for ln in lines]
    assert classes.count("mirror") == 1
    assert sorted(c for c in classes if c.startswith("edge")) == ["edge F1"] * 4 + ["edge F2"] * 4
    strokes = {ln.get("class"): ln.get("stroke") for ln in lines}
    assert strokes["edge F1"] != strokes["edge F2"]
    doc = fileio.read_json(placed)
    circles = root.findall(f"{ns}circle")
    assert [[c.get("data-x"), c.get("data-y")] for c in circles] == doc["coords"]


def test_render_marks_rotation_centre():
    sg, norm = fileio.parse_instance(fileio.read_json(DATA / "k4_halfturn.json"))
    from symiso.placement import synthesize
    sp = synthesize(sg, norm)
    svg = render_svg(sg.graph, sp.placement, norm, sp.tau)
    assert 'class="centre"' in svg and 'class="mirror"' not in svg


def test_fraction_round_trip():
    for x in (F(0), F(-3), F(7, 12), F(-1, 3)):
        assert fileio.parse_fraction(fileio.fraction_text(x)) == x
    with pytest.raises(fileio.FormatError):
        fileio.parse_fraction(0.5)
    with pytest.raises(fileio.FormatError):
        fileio.parse_fraction(True)
    assert fileio.parse_norm({"phi1": ["1/2", "1/2"], "phi2": ["1/2", "-1/2"]}).phi2 == (F(1, 2), F(-1, 2))
    assert fileio.parse_norm(None) == linf_norm()


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "symiso.cli", "check", "--input", str(DATA / "mirror_swap6.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "mode: Swapped" in proc.stdout
