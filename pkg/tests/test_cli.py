import json
import subprocess
import sys
from pathlib import Path

import pytest

from subperiod import records
from subperiod.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["seq", "--set", "1,2,3", "--n", "8", "outcome"], "01110111\n"),
        (["seq", "--set", "1", "--n", "4", "grundy"], "0 1 0 1\n"),
        (["seq", "--set", "1,3,4", "--n", "7", "outcome"], "0101111\n"),
    ],
)
def test_seq(capsys, argv, expected):
    assert run(capsys, *argv)[:2] == (0, expected)


def test_seq_json_and_csv(capsys):
    code, out, _ = run(capsys, "--format", "json", "seq", "--set", "2,5", "--n", "5", "grundy")
    assert json.loads(out) == {"set": [2, 5], "mode": "grundy", "length": 5, "values": [0, 0, 1, 1, 0]}
    code, out, _ = run(capsys, "seq", "--set", "2,5", "--n", "3", "--format", "csv")
    assert out == "position;value\n0;0\n1;0\n2;1\n"


@pytest.mark.parametrize("argv", [["seq", "--set", "1,1", "--n", "3"], ["seq", "--set", "1,x", "--n", "3"],
                                  ["seq", "--set", "2", "--n", "0"]])
def test_seq_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and "error" in err


@pytest.mark.parametrize(
    "moves, expected",
    [
        ("1,3,7,8", "set=1,3,7,8 preperiod=0 period=15 block=010101011111111 notation=(010101011111111)\n"),
        ("1,2,12", "set=1,2,12 preperiod=0 period=13 block=0110110110111 notation=(0110110110111)\n"),
        ("1", "set=1 preperiod=0 period=2 block=01 notation=(01)\n"),
    ],
)
def test_period(capsys, moves, expected):
    assert run(capsys, "period", "--set", moves)[:2] == (0, expected)


def test_period_grundy(capsys):
    code, out, _ = run(capsys, "period", "--set", "1,2,3", "--grundy")
    assert "period=4 block=0123" in out


def test_period_cap_exhausted(capsys):
    code, out, err = run(capsys, "--horizon-cap", "300", "period", "--set", "1,8,22,23")
    assert code == 1 and "300" in err and out == ""


def test_period_cap_below_minimum(capsys):
    code, _, err = run(capsys, "period", "--set", "1,2,30", "--horizon-cap", "100")
    assert code == 1 and "184" in err


def test_cap_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("SUBPERIOD_HORIZON_CAP", "300")
    assert run(capsys, "period", "--set", "1,8,22,23")[0] == 1
    assert run(capsys, "period", "--set", "1,8,22,23", "--horizon-cap", "1000")[0] == 0


def test_theorem_t1(capsys):
    code, out, err = run(capsys, "theorem", "--id", "1", "--k", "3..15")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 13
    assert all(" match " in line for line in lines)
    assert "13 records: 13 match" in err


def test_theorem_t4_mismatch(capsys):
    code, out, _ = run(capsys, "theorem", "--id", "4", "--s", "2", "--selectors", "1")
    assert code == 2
    assert out.splitlines() == ["T4 s=2 selectors=1 set=2,5 period-mismatch predicted=4 computed=7 preperiod=0"]


def test_theorem_eq1(capsys):
    code, out, _ = run(capsys, "--format", "json", "theorem", "--id", "eq1", "--s1", "1", "--s2", "2..10")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 9 and {r["status"] for r in rows} == {"match"}


def test_theorem_stated_variant_fails(capsys):
    code, out, _ = run(capsys, "theorem", "--id", "2", "--variant", "stated")
    assert code == 2 and out.count("period-mismatch") == 15


@pytest.mark.parametrize("argv", [["theorem", "--id", "1", "--k", "9..3"], ["theorem", "--id", "4", "--selectors", "12"],
                                  ["theorem", "--id", "5"], ["theorem", "--id", "2", "--variant", "guess"]])
def test_theorem_bad_flags(capsys, argv):
    assert run(capsys, *argv)[0] == 1


@pytest.mark.parametrize("table", [1, 2, 3, 4])
def test_table_golden(capsys, table):
    code, out, _ = run(capsys, "table", "--id", str(table))
    assert code == 0
    assert out == (GOLDEN / f"table{table}.txt").read_text()


def test_table_rows(capsys):
    assert run(capsys, "table", "--id", "1")[1].splitlines()[0] == "1,2,3 (0111) 4"
    rows = {line.split()[0]: line.split() for line in run(capsys, "table", "--id", "3")[1].splitlines()}
    assert rows["1,9,10"][2] == "19"


def test_table_one_six_sixteen(capsys):
    """Published period for {1,6,16} is 5; computation certifies 17."""
    rows = {line.split()[0]: line.split() for line in run(capsys, "table", "--id", "4")[1].splitlines()}
    assert rows["1,6,16"][2] == "5"


def test_table_structured(capsys):
    _, out, _ = run(capsys, "table", "--id", "4", "--format", "json")
    rows = json.loads(out)
    assert [r["period"] for r in rows[:5]] == [11, 16, 21, 5, 5]
    assert rows[0]["published_notation"] == "010110101111101101(01101101101)"


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--family", "1,4,5k", "--range", "2..4", "--format", "csv")
    rows = records.read_csv(out)
    assert out.splitlines()[0].startswith("set;preperiod;period;block;horizon")
    assert [r["set"] for r in rows] == [[1, 4, 10], [1, 4, 15], [1, 4, 20]]
    assert [r["period"] for r in rows] == [11, 16, 21]


@pytest.mark.parametrize(
    "family, krange, periods",
    [("1,2,k", "4..5", [3, 3]), ("k,2k", "1..3", [3, 6, 9])],
)
def test_scan_text(capsys, family, krange, periods):
    code, out, _ = run(capsys, "scan", "--family", family, "--range", krange)
    assert code == 0
    assert [int(line.split("period=")[2].split()[0]) for line in out.splitlines()] == periods


def test_scan_parse_error_position(capsys):
    code, _, err = run(capsys, "scan", "--family", "1,4,5q", "--range", "1..2")
    assert code == 1 and "position 5" in err


def test_scan_horizon_failure_is_a_record(capsys):
    code, out, _ = run(capsys, "--format", "json", "--horizon-cap", "300", "scan", "--family", "1,8,22,k", "--range", "23")
    (row,) = json.loads(out)
    assert code == 1 and row["status"] == "horizon-exhausted" and row["period"] is None


@pytest.mark.parametrize(
    "moves, pos, expected",
    [("1,2,3", "5", "take 1 → 4\n"), ("1,2,3", "4", "P-position\n"), ("1", "0", "P-position\n")],
)
def test_move(capsys, moves, pos, expected):
    assert run(capsys, "move", "--set", moves, "--pos", pos)[:2] == (0, expected)


def test_move_invalid(capsys):
    assert run(capsys, "move", "--set", "1,2", "--pos", "-3")[0] == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["theorem", "--id", "4", "--s", "1..3", "--n", "2"],
        ["scan", "--family", "k,2k", "--range", "0..3"],
        ["table", "--id", "4"],
        ["period", "--set", "1,6,14"],
    ],
)
def test_csv_json_round_trip(capsys, argv):
    main(argv + ["--format", "csv"])
    csv_rows = records.read_csv(capsys.readouterr().out)
    main(argv + ["--format", "json"])
    json_rows = json.loads(capsys.readouterr().out)
    assert csv_rows == json_rows


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t1.csv"
    assert main(["table", "--id", "1", "--format", "csv", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text().startswith("set;preperiod;period;block;horizon;notation")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "subperiod", "period", "--set", "1,3,7,8"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "period=15" in proc.stdout
