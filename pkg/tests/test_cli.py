import csv
import io
import json

import pytest

from schurmin.cli import main
from schurmin.coloring import make_zs


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def table(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_count_family(capsys):
    code, out, _ = run(capsys, "count", "--family", "zs", "--s", "0", "--n", "1100")
    rec = records(out)[0]
    assert code == 0 and rec["schema"] == 1
    assert abs(rec["total"] - 1100**2 / 22) <= 1100
    assert 0.9 < rec["ratio_22F_n2"] < 1.1


@pytest.mark.parametrize("text, total", [("00110", 0), ("000", 1), ("0^4 1^6 0^1", 2)])
def test_count_coloring(capsys, text, total):
    code, out, _ = run(capsys, "count", "--coloring", text)
    assert code == 0 and records(out)[0]["total"] == total


def test_count_naive_matches(capsys):
    _, fast, _ = run(capsys, "count", "--family", "zinf", "--t", "5", "--n", "300")
    _, naive, _ = run(capsys, "count", "--family", "zinf", "--t", "5", "--n", "300", "--naive")
    assert records(fast)[0]["total"] == records(naive)[0]["total"]


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "count", "--coloring", "0^0 1^3")
    assert code == 2 and "0^0" in err


def test_invalid_family_exit(capsys):
    code, _, err = run(capsys, "count", "--family", "zinf", "--t", "12", "--n", "100")
    assert code == 2 and "t must lie" in err


def test_families_csv(capsys):
    code, out, _ = run(capsys, "families", "--n", "2200", "--s", "0,1,2", "--t", "3", "--csv")
    rows = table(out)
    assert code == 0
    assert list(rows[0]) == ["family", "n", "param", "F", "coefficient"]
    zs = [r for r in rows if r["family"] == "Zs"]
    assert [float(r["F"]) for r in zs] == sorted(float(r["F"]) for r in zs)


def test_families_z0_n11(capsys):
    _, out, _ = run(capsys, "families", "--n", "11", "--s", "0", "--t", "", "--csv")
    assert table(out)[0]["F"] == "2"


def test_grad(capsys):
    code, out, _ = run(capsys, "grad", "--coloring", "00110", "--index", "3")
    rec = records(out)[0]
    assert code == 0 and rec["delta_F"] == -2 and rec["agree"]
    code, out, _ = run(capsys, "grad", "--coloring", "0011010", "--csv")
    assert code == 0 and len(table(out)) == 7


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--family", "zs", "--s", "0", "--n", "1100", "--objective", "G")
    assert code == 0 and records(out)[0]["is_local_min"] is True


def test_pingpong_solutions(capsys):
    code, out, _ = run(capsys, "pingpong", "--n", "11", "--k", "6", "--csv")
    rows = table(out)
    assert code == 0
    assert "0^4 1^6 0^1" in {r["solution"] for r in rows}
    code, out, _ = run(capsys, "pingpong", "--n", "6", "--k", "6", "--mode", "all", "--csv")
    assert [r["solution"] for r in table(out)] == ["0^6"]


def test_pingpong_survey(capsys):
    code, out, err = run(capsys, "pingpong", "--survey", "--n", "44", "--budget", "5000", "--csv")
    rows = {int(r["w"]): r for r in table(out)}
    assert int(rows[4]["consistent_count"]) > 0 and rows[4]["truncated"] == "0"
    assert "III(s=0)" in rows[4]["case_histogram"]
    assert code == 3  # near-balanced k exhaust the small budget


def test_pingpong_sampling(capsys):
    code, out, _ = run(capsys, "pingpong", "--n", "44", "--k", "24", "--sample", "50", "--seed", "3", "--csv")
    assert code == 0
    assert all(r["consistent"] == "1" for r in table(out))


def test_brute(capsys):
    code, out, _ = run(capsys, "brute", "--n", "5")
    assert code == 0 and records(out)[0]["min_value"] == 0
    code, out, _ = run(capsys, "brute", "--n", "6", "--local", "G")
    assert code == 0 and records(out)[0]["local_minima"]
    code, _, err = run(capsys, "brute", "--n", "40")
    assert code == 2 and "cap" in err


def test_descend_and_multistart(capsys):
    code, out, _ = run(capsys, "descend", "--coloring", "11111")
    assert code == 0 and records(out)[0]["value"] == 0
    code, out, _ = run(capsys, "descend", "--random", "--n", "40", "--seed", "4")
    first = records(out)[0]
    _, out, _ = run(capsys, "descend", "--random", "--n", "40", "--seed", "4")
    assert records(out)[0] == first
    code, out, _ = run(capsys, "multistart", "--n", "5", "--restarts", "10", "--seed", "7")
    assert code == 0 and records(out)[0]["value"] == 0


def test_extend(capsys):
    code, out, _ = run(capsys, "extend", "--r", "3", "--n", "4400")
    rec = records(out)[0]
    assert code == 0
    assert rec["total"] <= 4400**2 / 88 + rec["C"] * 4400 + 1e-9
    assert rec["bound_n2"] == 4400**2 / 88


def test_text_and_file_output(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "families", "--n", "110", "--s", "0", "--t", "3", "--csv", "-o", str(path))
    assert code == 0 and out == ""
    assert table(path.read_text())[0]["family"] == "Zs"
    code, out, _ = run(capsys, "count", "--coloring", "000", "--format", "text")
    assert out.startswith("[count]") and "total=1" in out


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--fast-n", "1000", "--naive-n", "500", "--brute-n", "10")
    rec = records(out)[0]
    assert code == 0 and {"count_fast_s", "count_naive_s", "brute_global_min_s"} <= set(rec)


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run(
        [sys.executable, "-m", "schurmin", "count", "--coloring", "00001111110"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(res.stdout)["total"] == 2
