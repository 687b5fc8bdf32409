import json
from fractions import Fraction

import pytest

from cde.cli import main
from cde.poset import dump_poset, pabcd


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, "--emit", "json", *argv)
    assert code == 0, err
    return json.loads(out)


def test_young_stats(capsys):
    data = run_json(capsys, "young", "stats", "--shape", "2,1")
    assert data["f"] == 2
    assert data["f_plus"] == 8
    assert data["EX"] == "1"
    assert data["EY"] == "1"


def test_young_stats_311(capsys):
    data = run_json(capsys, "young", "stats", "--shape", "3,1,1")
    assert data["EX"] == "13/10"
    assert data["EY"] == "23/18"
    assert data["R"] == 10 and data["R_plus"] == 13
    assert data["f"] == 6


def test_perm_stats(capsys):
    data = run_json(capsys, "perm", "stats", "--w", "25314")
    assert data["vexillary"] is True
    assert data["shape"] == "3,1,1"
    assert data["EX"] == "14/11"
    assert data["EY"] == "23/18"
    data = run_json(capsys, "perm", "stats", "--w", "4231")
    assert data["EX"] == "5/4"
    assert data["dominant"] is True


def test_perm_stats_xm(capsys):
    data = run_json(capsys, "perm", "stats", "--w", "53124", "--xm", "3")
    assert data["EX^(1)"] == "4/3"
    assert data["EX^(2)"] == "206/155"
    assert data["is_mCDE_upto_3"] is False


def test_fk_command(capsys):
    data = run_json(capsys, "fk", "--w", "321", "--L", "3")
    assert data["coefficients"] == [6, 13, 9, 2]
    data = run_json(capsys, "fk", "--w", "321", "--L", "4", "--via", "both")
    assert data["agreement"] is True
    # 2(x+1)(x+2)(2x+3)^2, constant term first
    assert data["coefficients"] == [36, 102, 106, 48, 8]


def test_perm_from_word(capsys):
    data = run_json(capsys, "perm", "stats", "--word", "1,2,1,1")
    assert data["w"] == "321"
    assert data["length"] == 3
    data = run_json(capsys, "fk", "--word", "2,1,2", "--L", "4")
    assert data["coefficients"] == [36, 102, 106, 48, 8]


def test_poset_builder(capsys):
    data = run_json(capsys, "poset", "stats", "--builder", "tamari", "--n", "6")
    assert data["EX"] == "3/2" and data["EY"] == "3/2"
    data = run_json(capsys, "poset", "stats", "--builder", "pabcd",
                    "--a", "2", "--b", "2", "--c", "3", "--d", "1")
    assert data["EX"] == "1" and data["EY"] == "1"


def test_poset_file_and_dual(capsys, tmp_path):
    path = tmp_path / "p.poset"
    path.write_text(dump_poset(pabcd(1, 1, 2, 1)))
    data = run_json(capsys, "poset", "stats", "--file", str(path))
    assert data["n"] == 5 and data["EX"] == "1"
    dual_data = run_json(capsys, "poset", "stats", "--file", str(path), "--dual")
    assert dual_data["EX"] == "1"


def test_poset_stats_xm(capsys):
    data = run_json(capsys, "poset", "stats", "--builder", "boolean", "--n", "2", "--xm", "5")
    assert all(data[f"EX^({m})"] == "1" for m in range(1, 6))
    assert data["is_mCDE_upto_5"] is True


def test_shifted_stats(capsys):
    data = run_json(capsys, "shifted", "stats", "--shape", "3,1")
    assert data["EX"] == "1" and data["EY"] == "1" and data["is_CDE"] is True


def test_emit_tableaux(capsys):
    code, out, _ = run_cli(capsys, "--emit", "tableaux", "young", "stats", "--shape", "2,1")
    assert code == 0
    blocks = [b for b in out.strip().split("\n\n") if b]
    assert len(blocks) == 8
    assert "{1,2}\t{3}\n{4}" in out


def test_verify_cli(capsys):
    code, out, _ = run_cli(capsys, "--emit", "json", "verify", "--suite", "negatives", "--budget", "60")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 4
    assert all(r["status"] == "pass" for r in lines)


def test_verify_cli_table(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "prop-self-dual", "--budget", "60")
    assert code == 0
    assert "prop-self-dual" in out


def test_json_roundtrip_recompute(capsys):
    data = run_json(capsys, "young", "stats", "--shape", "4,2")
    # recompute from the parsed JSON and compare
    ex = Fraction(data["R_plus"], data["R"])
    assert str(ex) == data["EX"]
    ey = Fraction(data["f_plus"], (data["cells"] + 1) * data["f"])
    assert str(ey) == data["EY"]
    assert ex == ey == Fraction(4, 3)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["young", "stats"])  # missing --shape
    assert exc.value.code == 2


def test_malformed_input_exit_code(capsys):
    code, _, err = run_cli(capsys, "perm", "stats", "--w", "1231")
    assert code == 2
    assert "error" in err


def test_approx_flag(capsys):
    code, out, _ = run_cli(capsys, "--approx", "young", "stats", "--shape", "3,1,1")
    assert code == 0
    assert "(~1.3" in out
