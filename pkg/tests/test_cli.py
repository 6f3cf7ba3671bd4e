import json
import subprocess
import sys

import pytest

from cubic_coordination import cli, report


def run(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def test_table_csv_has_no_header(capsys):
    code, out = run(["table", "S", "5", "5", "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines() == ["1,1,1,1,1", "0,2,4,6,8", "0,2,8,18,32", "0,2,12,38,88", "0,2,16,66,192"]


def test_triangle_rows(capsys):
    _, out = run(["table", "c-tri", "5", "--format", "csv"], capsys)
    assert out.splitlines() == ["1", "2,1", "2,4,1", "2,8,6,1", "2,12,18,8,1"]


def test_single_cell_table(capsys):
    _, out = run(["table", "D", "1", "1", "--format", "csv"], capsys)
    assert out == "1\n"


def test_pretty_table_layout(capsys):
    _, out = run(["table", "D", "5", "5"], capsys)
    lines = out.splitlines()
    assert lines[0].split("|")[1].split() == ["0", "1", "2", "3", "4"]
    assert lines[-1].split("|")[1].split() == ["1", "9", "41", "129", "321"]


def test_general_family_json(capsys):
    _, out = run(["table", "L(3)", "2", "3", "--format", "json"], capsys)
    assert json.loads(out) == {"family": "L(3)", "rows": [[1, 1, 1], [3, 5, 7]]}


def test_bad_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "Q", "3"])
    assert exc.value.code == 2


def test_big_integers_become_strings(capsys):
    _, out = run(["series", "D", "40", "--format", "json"], capsys)
    values = json.loads(out)["values"]
    assert values[5] == 1683
    assert isinstance(values[40], str) and int(values[40]) > 2**63


@pytest.mark.parametrize("method", ["recurrence", "gf", "jacobi"])
def test_series_methods_agree(capsys, method):
    _, out = run(["series", "C", "10", "--method", method], capsys)
    assert out.strip().split(",")[:5] == ["1", "4", "18", "88", "450"]


def test_schroder_has_no_jacobi_form(capsys):
    with pytest.raises(SystemExit):
        cli.main(["series", "Schroder", "5", "--method", "jacobi"])


def test_verify_hankel_report(capsys):
    code, out = run(["verify", "hankel", "--N", "8", "--no-timing"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"suite", "params", "checks", "seed"}
    ids = [c["id"] for c in doc["checks"]]
    assert ids == sorted(ids)
    not_sm = next(c for c in doc["checks"] if c["id"] == "hankel.not_sm.C")
    assert not_sm["witness"]["witness"][2] == -4


def test_verify_is_byte_identical_without_timing(capsys):
    _, first = run(["verify", "positivity", "--smoke", "--no-timing", "--seed", "11"], capsys)
    _, second = run(["verify", "positivity", "--smoke", "--no-timing", "--seed", "11"], capsys)
    assert first == second
    assert json.loads(first)["seed"] == 11


def test_verify_csv_has_header(capsys):
    _, out = run(["verify", "hankel", "--N", "4", "--format", "csv", "--no-timing"], capsys)
    assert out.splitlines()[0] == "id,paper_ref,verdict,witness"


def test_failed_check_sets_exit_status(capsys, monkeypatch):
    def failing(run, **params):
        run.check("synthetic.fail", "negative control", lambda: (False, {"value": -1}))

    monkeypatch.setitem(report._RUNNERS, "hankel", failing)
    code, out = run(["verify", "hankel", "--no-timing"], capsys)
    assert code == 1
    assert json.loads(out)["checks"][0]["verdict"] == "fail"


def test_seed_range_is_checked():
    with pytest.raises(SystemExit):
        cli.main(["verify", "hankel", "--seed", str(2**64)])


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "cubic_coordination", "table", "S", "2", "2", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout == "1,1\n0,2\n"
