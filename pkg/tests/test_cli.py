import csv
import io
import json
import pathlib
import time
from fractions import Fraction

import jsonschema
import pytest

from ultrabessel import cli
from ultrabessel.mcmahon.golden import c5_reference

DOCS = pathlib.Path(__file__).resolve().parents[1] / "docs"
RECORD_SCHEMA = json.loads((DOCS / "output_record.schema.json").read_text())
TABLE_SCHEMA = json.loads((DOCS / "coefficient_table.schema.json").read_text())


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, RECORD_SCHEMA)
    return doc


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_expand_symbolic_b2(capsys):
    doc = run_json(capsys, "expand", "--kind", "b", "--order", "2", "--symbolic")
    assert [r["power"] for r in doc["rows"]] == [1, 3]
    c1 = {(t["mu_exp"], t["delta_exp"]): Fraction(t["coefficient"]) for t in doc["rows"][0]["terms"]}
    assert c1 == {(1, 0): Fraction(-1, 8), (0, 0): Fraction(-3, 8), (0, 1): Fraction(-1)}
    c3 = {(t["mu_exp"], t["delta_exp"]): Fraction(t["coefficient"]) for t in doc["rows"][1]["terms"]}
    scale = Fraction(-4, 1536)
    expected = {(2, 0): 7, (1, 0): 82, (1, 1): 144, (0, 0): -9, (0, 1): 144, (0, 2): 192, (0, 3): -128}
    assert c3 == {key: scale * v for key, v in expected.items()}


def test_expand_csv_header(capsys):
    code, out, _ = run(capsys, "expand", "--kind", "b", "--order", "2")
    assert code == 0
    assert out.splitlines()[0] == "power,mu_exp,delta_exp,coefficient"


def test_expand_numeric_trivial(capsys):
    doc = run_json(capsys, "expand", "--kind", "a", "--order", "1", "--nu", "0", "--delta", "0")
    assert doc["rows"] == [{"power": 1, "exact": "-3/8", "value": -0.375}]


def test_expand_numeric_c5_spherical(capsys):
    doc = run_json(capsys, "expand", "--kind", "b", "--order", "3", "--nu", "0.5", "--delta", "0.5")
    row = next(r for r in doc["rows"] if r["power"] == 5)
    assert Fraction(row["exact"]) == c5_reference(Fraction(1), Fraction(1, 2)) / 8**5


def test_export_table_validates(capsys, tmp_path):
    path = tmp_path / "table.json"
    code, _, _ = run(capsys, "expand", "--kind", "a", "--order", "4", "--export-table", str(path))
    assert code == 0
    jsonschema.validate(json.loads(path.read_text()), TABLE_SCHEMA)


def test_zeros_refined_first_five(capsys):
    code, out, _ = run(capsys, "zeros", "--kind", "a", "--nu", "0", "--delta", "0", "--k", "1..5",
                       "--method", "refined")
    assert code == 0
    got = [float(r["refined"]) for r in csv_rows(out)]
    want = [3.8317059702, 7.0155866698, 10.1734681351, 13.3236919363, 16.4706300509]
    assert got == pytest.approx(want, abs=1e-9)


def test_zeros_both_agree_at_k100(capsys):
    doc = run_json(capsys, "zeros", "--kind", "b", "--nu", "2", "--delta", "-1", "--k", "100",
                   "--method", "both")
    (row,) = doc["rows"]
    assert row["abs_diff"] < 1e-10
    assert row["index_certified"] in (True, False)


def test_zeros_expansion_is_fast(capsys):
    t0 = time.perf_counter()
    code, out, _ = run(capsys, "zeros", "--kind", "b", "--nu", "2", "--delta", "-1", "--k", "100000",
                       "--method", "expansion")
    assert code == 0 and time.perf_counter() - t0 < 1.0
    assert float(csv_rows(out)[0]["expansion"]) > 3e5


def test_zeros_paper_indexing_shifts(capsys):
    # theorem numbering of J_0' zeros starts at the origin
    doc = run_json(capsys, "zeros", "--kind", "a", "--nu", "0", "--delta", "0", "--k", "1..2",
                   "--paper-indexing")
    origin, first = doc["rows"]
    assert doc["params"]["index_offset"] == -1
    assert origin["positive_k"] == 0 and origin["refined"] is None
    assert first["refined"] == pytest.approx(3.8317059702, abs=1e-9)


@pytest.mark.parametrize("argv", [
    ["zeros", "--kind", "a", "--nu", "0", "--delta", "0", "--k", "0..3"],
    ["zeros", "--kind", "a", "--nu", "0", "--delta", "0", "--k", "1001", "--method", "refined"],
    ["zeros", "--kind", "q", "--nu", "0", "--delta", "0", "--k", "1"],
    ["expand", "--kind", "a", "--order", "99"],
    ["expand", "--kind", "a", "--order", "2", "--nu", "1"],
    ["study", "--kind", "b", "--nu", "0", "--delta", "0", "--orders", "0..2", "--k", ""],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    rows = csv_rows(out)
    assert rows and all(r["status"] == "PASS" for r in rows)


def test_verify_perturbed_fails_with_diff(capsys):
    code, out, err = run(capsys, "verify", "--perturb", "5:1:0")
    assert code == 4
    bad = [r for r in csv_rows(out) if r["status"] == "FAIL"]
    assert bad and bad[0]["detail"]
    assert "verification failed" in err


def test_verify_airy(capsys):
    doc = run_json(capsys, "verify", "--airy")
    assert all(r["status"] == "PASS" for r in doc["rows"])
    assert any("Bi'" in r["check"] for r in doc["rows"])


def test_study_slopes(capsys):
    doc = run_json(capsys, "study", "--kind", "b", "--nu", "0", "--delta", "0", "--orders", "0..4",
                   "--k", "20,40,80,160")
    slopes = {s["order"]: s["slope"] for s in doc["summary"]["slopes"]}
    for m in range(5):
        assert slopes[m] == pytest.approx(-(2 * m + 1), abs=0.3)


def test_study_step_keeps_endpoint(capsys):
    doc = run_json(capsys, "study", "--kind", "a", "--nu", "0", "--delta", "0", "--orders", "1",
                   "--k", "20..30", "--step", "4")
    assert doc["params"]["k"] == [20, 24, 28, 30]


def test_byte_identical_reruns(capsys, tmp_path):
    argv = ["zeros", "--kind", "b", "--nu", "1/2", "--delta", "0.5", "--k", "1..4,9", "--method", "both",
            "--json"]
    outs = []
    for i in range(2):
        path = tmp_path / f"o{i}.json"
        assert cli.main(argv + ["--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert capsys.readouterr().out == ""


def test_float_format_round_trips():
    for x in (0.1, 1 / 3, 2.1971413260310170351, 1e-300):
        assert float(cli.fmt_float(x)) == x


def test_parse_int_set():
    assert cli.parse_int_set("3..5,1,5") == [1, 3, 4, 5]
    with pytest.raises(cli.UsageError):
        cli.parse_int_set("5..3")


def test_numeric_failure_exit_code(capsys, monkeypatch):
    import ultrabessel.zeros as zeros_pkg
    from ultrabessel.rootfind import BracketFailure

    def boom(q):
        raise BracketFailure("no sign change")

    monkeypatch.setattr(zeros_pkg, "find_zero", boom)
    code, _, err = run(capsys, "zeros", "--kind", "a", "--nu", "0", "--delta", "0", "--k", "7")
    assert code == 3 and "k=7" in err
