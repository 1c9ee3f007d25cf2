import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from cubicpoisson.cli import main

CORPUS = resources.files("cubicpoisson") / "data" / "normal_forms.jsonl"
SCHEMA = json.loads((resources.files("cubicpoisson") / "data" / "report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def validate(payload):
    jsonschema.Draft202012Validator(SCHEMA).validate(payload)


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_analyze_triple_line_json(capsys):
    code, out, _ = run(capsys, "analyze", "z0^3", "--format", "json")
    assert code == 0
    report = json.loads(out)
    validate(report)
    assert report["curve_type"] == "TripleLine"
    strict = report["modes"]["strict"]
    assert strict["mode"] == "strict" and strict["dimension"] == 5
    assert strict["is_reductive"] is False
    assert report["obstruction"]["strict"] == "obstructed"


def test_analyze_three_lines_general(capsys):
    code, out, _ = run(capsys, "analyze", "z0*z1*z2", "--format", "json", "--mode", "strict")
    report = json.loads(out)
    validate(report)
    assert list(report["modes"]) == ["strict"]
    m = report["modes"]["strict"]
    assert (m["dimension"], m["is_abelian"], m["is_reductive"]) == (2, True, True)
    assert report["obstruction"] == {"strict": "not_obstructed_by_this_criterion"}
    assert any("2-torus" in a for a in report["annotations"])


def test_analyze_smooth_text(capsys):
    code, out, _ = run(capsys, "analyze", "z0^3+z1^3+z2^3")
    assert code == 0
    assert out.startswith("# cubicpoisson ")
    assert "SmoothElliptic" in out
    assert "not_obstructed_by_this_criterion" in out


def test_concurrent_lines_report_flags_disagreement(capsys):
    _, out, _ = run(capsys, "analyze", "z0*z1*(z0+z1)", "--format", "json")
    report = json.loads(out)
    assert report["modes_agree"] is False
    assert report["obstruction"] == {"strict": "not_obstructed_by_this_criterion", "divisor": "obstructed"}
    assert any("three concurrent lines" in a for a in report["annotations"])
    assert report["modes"]["strict"]["basis"] == [
        [["0", "0", "0"], ["0", "0", "0"], ["1", "0", "0"]],
        [["0", "0", "0"], ["0", "0", "0"], ["0", "1", "0"]],
    ]


def test_rationals_are_strings(capsys):
    _, out, _ = run(capsys, "analyze", "z0*z1*(z0+z1)", "--format", "json", "--mode", "divisor")
    report = json.loads(out)
    validate(report)
    entries = [x for b in report["modes"]["divisor"]["basis"] for row in b for x in row]
    assert all(isinstance(x, str) for x in entries)
    assert "-1/3" in entries


@pytest.mark.parametrize("expr, tag", [("z0^2*z1", "DoubleLinePlusLine"), ("z0*z1*(z0+z1)", "ThreeLinesConcurrent")])
def test_classify(capsys, expr, tag):
    code, out, _ = run(capsys, "classify", expr)
    assert code == 0
    assert out.splitlines()[0] == tag


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "z1^2*z2 - z0^3", "--format", "json")
    payload = json.loads(out)
    assert payload["curve_type"] == "Cuspidal" and payload["index"] == 3
    assert payload["singular_data"]["rational_singular_points"][0]["point"] == ["0", "0", "1"]


def test_exit_codes(capsys):
    assert run(capsys, "classify", "z0+z1")[0] == 4
    code, _, err = run(capsys, "analyze", "z0 + z1^2")
    assert code == 3 and "homogeneous" in err
    assert run(capsys, "analyze", "2z0^3")[0] == 3
    assert run(capsys, "analyze", "z0^3 - z0^3")[0] == 4
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])
    assert exc.value.code == 2


def test_batch_corpus(capsys):
    code, out, _ = run(capsys, "batch", "--corpus", str(CORPUS), "--format", "json")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    tags = []
    for line in lines:
        rec = json.loads(line)
        validate(rec)
        tags.append(rec["curve_type"])
    assert tags == ["SmoothElliptic", "Nodal", "Cuspidal", "ConicLineGeneral", "ConicLineTangent",
                    "ThreeLinesGeneral", "ThreeLinesConcurrent", "DoubleLinePlusLine", "TripleLine"]


def test_batch_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "batch", "--corpus", str(CORPUS), "--format", "json")
    _, parallel, _ = run(capsys, "batch", "--corpus", str(CORPUS), "--format", "json", "--jobs", "3")
    assert serial == parallel


def test_batch_empty_corpus(capsys, tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    code, out, _ = run(capsys, "batch", "--corpus", str(path), "--format", "json")
    assert code == 0 and out == ""


def test_batch_isolates_bad_record(capsys, tmp_path):
    path = tmp_path / "mixed.jsonl"
    path.write_text("\n".join(json.dumps(r) for r in [
        {"id": "a", "f": "z0^3"},
        {"id": "b", "f": "z0 + z1^2"},
        {"id": "c", "f": "z0*z1*z2"},
    ]) + "\n")
    code, out, _ = run(capsys, "batch", "--corpus", str(path), "--format", "json")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    for r in recs:
        validate(r)
    assert [r["id"] for r in recs] == ["a", "b", "c"]
    assert recs[1]["error"]["kind"] == "parse"
    assert "curve_type" in recs[0] and "curve_type" in recs[2]


def test_batch_text(capsys, tmp_path):
    path = tmp_path / "one.jsonl"
    path.write_text('{"id": "x", "f": "z0+z1"}\n')
    code, out, _ = run(capsys, "batch", "--corpus", str(path))
    assert code == 0
    assert "== x" in out and "error (precondition)" in out


def test_batch_missing_and_malformed(capsys, tmp_path):
    assert run(capsys, "batch", "--corpus", str(tmp_path / "nope.jsonl"))[0] == 6
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"id": "a", "f": "z0^3"}\nnot json\n')
    code, _, err = run(capsys, "batch", "--corpus", str(bad))
    assert code == 7 and ":2:" in err
    bad.write_text('{"id": 1, "f": "z0^3"}\n')
    assert run(capsys, "batch", "--corpus", str(bad))[0] == 7


def test_normal_forms_listing(capsys):
    code, out, _ = run(capsys, "normal-forms")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[0] == "1\tSmoothElliptic\tz0^3 + z1^3 + z2^3"
    _, out, _ = run(capsys, "normal-forms", "--format", "json")
    records = json.loads(out)
    assert len(records) == 9 and records[-1] == {"index": 9, "curve_type": "TripleLine", "f": "z0^3"}
    assert run(capsys, "normal-forms", "--format", "json")[1] == out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubicpoisson", "classify", "z0^3"],
                          capture_output=True, text=True, cwd=Path(__file__).parent)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "TripleLine"
