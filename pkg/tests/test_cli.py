import json
import subprocess
import sys

import pytest

from bridgecluster.cli import main
from bridgecluster.poly import HalfLaurent, MultiLaurent


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "7/19")
    assert code == 0
    assert "canonical: [2,1,2,2]" in out
    assert "mirror:    12/19 = [1,1,1,2,2]" in out
    assert "parity:    1/1" in out


def test_cf_one_half_json(capsys):
    code, out, _ = run(capsys, "cf", "1/2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["canonical"] == [2] and data["alternate"] == [1, 1]


def test_cf_mirror_of_12_19(capsys):
    _, out, _ = run(capsys, "cf", "12/19", "--format", "json")
    assert json.loads(out)["mirror"] == {"fraction": "7/19", "cf": [2, 1, 2, 2]}


def test_triangle_listing(capsys):
    code, out, _ = run(capsys, "triangle", "7/19")
    assert code == 0
    assert "orientations: RLRRLL" in out


def test_triangle_seifert(capsys):
    _, out, _ = run(capsys, "triangle", "7/19", "--seifert", "--format", "json")
    edges = json.loads(out)["seifert_edges"]
    assert edges == [["7/19", "3/8"], ["3/8", "1/3"], ["1/3", "1/2"], ["1/2", "1/1"]]


def test_triangle_svg_is_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "triangle", "1/2", "--svg", str(a))
    run(capsys, "triangle", "1/2", "--svg", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().count("<polygon") == 1


def test_cluster_both(capsys):
    code, out, _ = run(capsys, "cluster", "3/5", "--method", "both")
    assert code == 0
    assert "X = (x2^2 + y3*x2 + y1*x2 + y1*y3 + y1*y2*y3*x1*x3)/(x1*x2*x3)" in out
    assert "paths and mutation agree" in out


def test_cluster_one_half(capsys):
    _, out, _ = run(capsys, "cluster", "1/2")
    assert "X = (1 + y1)/x1" in out


def test_cluster_json_round_trip(capsys):
    _, out, _ = run(capsys, "cluster", "7/19", "--format", "json")
    data = json.loads(out)
    assert data["F_terms"] == 19 and len(data["F"]["terms"]) == 19
    f = MultiLaurent.from_json(data["F"])
    assert f.to_json() == data["F"]


def test_cluster_trace(capsys):
    _, out, _ = run(capsys, "cluster", "--cf", "1,1,2", "--trace", "--format", "json")
    trace = json.loads(out)["trace"]
    assert len(trace) == 4
    assert trace[2]["arrows"] == [[1, 2], [2, 3], [3, 1]]
    assert trace[3]["y"] == [[0, 1, 1], [-1, -1, 0], [0, 0, -1]]


def test_alexander_text(capsys):
    code, out, _ = run(capsys, "alexander", "3/5")
    assert code == 0
    assert "Delta = -t^(-1) + 3 - t" in out


def test_alexander_half_powers(capsys):
    _, out, _ = run(capsys, "alexander", "1/2")
    assert "Delta = -t^(-1/2) + t^(1/2)" in out


def test_alexander_json_schema(capsys):
    code, out, _ = run(capsys, "alexander", "7/19", "--method", "both", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"fraction", "cf", "t_signs", "e_signs", "d_times_2", "s", "alexander_u_poly", "oracle_match"}
    assert data["oracle_match"] is True
    assert data["t_signs"] == [-1, -1, 1, -1]
    assert HalfLaurent.from_json(data["alexander_u_poly"]) == HalfLaurent.from_t({-2: -1, -1: 5, 0: -7, 1: 5, 2: -1})


def test_alexander_skein_only(capsys):
    _, out, _ = run(capsys, "alexander", "2/7", "--method", "skein", "--format", "latex")
    assert out.strip() == r"\Delta_{2/7}(t) = 2t^{-1} - 3 + 2t"


def test_verify_tiny(capsys):
    code, out, _ = run(capsys, "verify", "--q-max", "2")
    assert code == 0
    assert "1 fractions" in out and "RESULT: PASS" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "alexander", "3/5", "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["fraction"] == "3/5"


@pytest.mark.parametrize("argv", [
    ["cf", "2/4"],
    ["cf", "3/2"],
    ["cf", "abc"],
    ["cf"],
    ["cf", "1/2", "--cf", "2"],
    ["cluster", "--cf", "1"],
    ["cluster", "1/50", "--max-n", "10"],
    ["cluster", "1/50", "--max-q", "20"],
    ["triangle", "7/19", "--path", "7/19,1/3"],
    ["verify", "--q-max", "1"],
    ["frobnicate"],
])
def test_validation_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("BRIDGECLUSTER_MAX_N", "3")
    code, _, err = run(capsys, "cluster", "7/19")
    assert code == 1 and "exceeds" in err
    code, _, _ = run(capsys, "cluster", "7/19", "--max-n", "6")
    assert code == 0


def test_large_n_warns(capsys):
    code, _, err = run(capsys, "cf", "1/45")
    assert code == 0 and "warning" in err


def test_invariant_failure_exits_2(capsys, monkeypatch):
    from bridgecluster import cli

    monkeypatch.setattr(cli, "alexander_skein_oracle", lambda cf: HalfLaurent.const(7))
    code, _, err = run(capsys, "alexander", "3/5", "--method", "both")
    assert code == 2
    assert "disagree" in err and "skein:" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bridgecluster", "cf", "3/5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "canonical: [1,1,2]" in proc.stdout
