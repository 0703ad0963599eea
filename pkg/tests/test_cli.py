import io
import json
import subprocess
import sys

import pytest

from banachlab import cli, disk

SPECS = {
    "zero_then_ones": {"algebra": "linf", "prefix_re": [0], "tail": {"kind": "const", "re": 1}},
    "one": {"algebra": "C", "a": 0, "b": 1, "repr": {"kind": "grid", "re": [1, 1]}},
    "bad_interval": {"algebra": "C", "a": 1, "b": 1, "repr": {"kind": "grid", "re": [1, 1]}},
    "lf_1": {"algebra": "disk", "poly": {"re": [-0.5, 0.5]}},
    "x_minus_half": {"algebra": "C", "a": 0, "b": 1, "repr": {"kind": "grid", "re": [-0.5, 0, 0.5]}},
    "regular_seq": {"algebra": "linf", "prefix_re": [2], "tail": {"kind": "const", "re": 1}},
    "near_root_poly": {"algebra": "C", "a": 0, "b": 1, "repr": {"kind": "poly", "coeffs_re": [1e-17, 0, 1]}},
}


@pytest.fixture
def spec_file(tmp_path):
    def make(name):
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(SPECS[name]))
        return str(p)

    return make


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out)
    return code, out.getvalue()


def test_classify_zero_then_ones(spec_file):
    code, text = run(["classify", "--spec", spec_file("zero_then_ones")])
    rep = json.loads(text)
    assert code == 0
    assert rep["classification"]["zero_divisor"]["status"] == "Proved"
    assert rep["classification"]["topological_divisor"]["status"] == "Proved"
    assert rep["element_spec"] == SPECS["zero_then_ones"]


def test_classify_unit(spec_file):
    code, text = run(["classify", "--spec", spec_file("one")])
    assert code == 0 and json.loads(text)["classification"]["regular"]["status"] == "Proved"


def test_bad_spec_exit_1(spec_file, capsys):
    code, _ = run(["classify", "--spec", spec_file("bad_interval")])
    assert code == 1 and "a must be < b" in capsys.readouterr().err


def test_missing_file_exit_1(tmp_path):
    assert run(["classify", "--spec", str(tmp_path / "nope.json")])[0] == 1


def test_unknown_verdict_exit_2(spec_file):
    # min |x^2 + 1e-17| = 1e-17 sits below the certification tolerance
    code, text = run(["classify", "--spec", spec_file("near_root_poly")])
    assert code == 2
    assert json.loads(text)["classification"]["topological_divisor"]["status"] == "Unknown"


def test_witness_disk_matches_closed_form(spec_file):
    code, text = run(["witness", "--spec", spec_file("lf_1"), "--kind", "tdz", "--indices", "1..5"])
    lines = text.strip().split("\n")
    assert code == 0 and lines[0] == "index,unit_norm_lo,unit_norm_hi,product_norm_lo,product_norm_hi"
    for line in lines[1:]:
        n, _, _, lo, hi = line.split(",")
        assert float(lo) <= disk.closed_form_witness_norm(int(n)) <= float(hi)


def test_witness_interval_rate(spec_file):
    code, text = run(["witness", "--spec", spec_file("x_minus_half"), "--kind", "tdz", "--indices", "1..4"])
    rows = [line.split(",") for line in text.strip().split("\n")[1:]]
    assert code == 0 and [float(r[4]) for r in rows] == [1 / 4, 1 / 8, 1 / 12, 1 / 16]


def test_witness_refused_exit_3(spec_file):
    assert run(["witness", "--spec", spec_file("regular_seq"), "--kind", "tdz"])[0] == 3


def test_witness_json_format(spec_file):
    code, text = run(["witness", "--spec", spec_file("zero_then_ones"), "--kind", "zero-divisor", "--indices", "2..3", "--format", "json"])
    assert code == 0 and [r["index"] for r in json.loads(text)] == [2, 3]


@pytest.mark.parametrize("bad", ["0..3", "5..2", "x", "1..y"])
def test_bad_indices_exit_1(spec_file, bad):
    with pytest.raises(SystemExit) as exc:
        cli.main(["witness", "--spec", spec_file("lf_1"), "--kind", "tdz", "--indices", bad])
    assert exc.value.code == 1


def test_unknown_suite_exit_1():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nosuch"])
    assert exc.value.code == 1


def test_verify_suite_prints_lines():
    code, text = run(["verify", "linear-factor"])
    assert code == 0
    assert "formula-match: PASS" in text and "dichotomy: PASS" in text


def test_verify_failure_exit_4(monkeypatch, capsys):
    from banachlab import verify

    failing = lambda config, seed: verify.CheckResult("always-fails", False, "forced")  # noqa: E731
    monkeypatch.setitem(verify.SUITES, "linf", [failing])
    code, text = run(["verify", "linf"])
    assert code == 4 and "always-fails: FAIL" in text
    assert "always-fails" in capsys.readouterr().err


def test_config_precedence(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"abs_tol": 1e-6, "circle_samples": 256}))
    args = cli.build_parser().parse_args(["verify", "linf", "--config", str(cfg), "--tol", "1e-7"])
    c = cli.resolve_config(args)
    assert c.abs_tol == 1e-7 and c.circle_samples == 256


def test_bad_config_exit_1(tmp_path, spec_file):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"unknown_field": 1}))
    assert run(["classify", "--spec", spec_file("one"), "--config", str(cfg)])[0] == 1


def test_determinism(spec_file):
    path = spec_file("lf_1")
    outs = {run(["classify", "--spec", path, "--seed", "3"])[1] for _ in range(3)}
    assert len(outs) == 1


def test_console_entry_point(spec_file):
    proc = subprocess.run(
        [sys.executable, "-m", "banachlab.cli", "classify", "--spec", spec_file("one")], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["classification"]["regular"]["status"] == "Proved"
