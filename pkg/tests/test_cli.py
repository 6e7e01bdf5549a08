import json
import subprocess
import sys

import pytest

from fracpart.cli import main
from fracpart.render import omega_from_dict, table_from_dict, witness_from_dict
from fracpart.odd import count_table
from oracles import GOLDENS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name,jmax,h", [("f_all", 12, None), ("f_h2", 13, 2)] + [(f"f_h{h}", 15, h) for h in range(3, 9)])
def test_odd_table_matches_golden(capsys, name, jmax, h):
    argv = ["odd-table", "--jmax", str(jmax)] + ([] if h is None else ["--h", str(h)])
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDENS / f"{name}.md").read_text()


def test_odd_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "odd-table", "--jmax", "9", "--h", "3", "--format", "json")
    assert code == 0
    assert table_from_dict(json.loads(out)) == count_table((3, 9), (1, 8), 3)


def test_odd_table_csv(capsys):
    _, out, _ = run(capsys, "odd-table", "--jmax", "4", "--format", "csv")
    assert out == "j,1,2,3\n3,1,1,0\n4,1,2,1\n"


def test_threads_flag_does_not_change_output(capsys, monkeypatch):
    _, one, _ = run(capsys, "odd-table", "--jmax", "14", "--threads", "1")
    monkeypatch.setenv("FRACPART_THREADS", "2")
    _, two, _ = run(capsys, "odd-table", "--jmax", "14")
    assert one == two


def test_witness_json(capsys):
    code, out, _ = run(capsys, "odd-witness", "--j", "10", "--k", "7", "--format", "json")
    w = witness_from_dict(json.loads(out))
    assert (code, w.numerators, w.k) == (0, (5, 7, 11, 13, 15, 19), 7)


def test_enumeration_json(capsys):
    _, out, _ = run(capsys, "odd-enum", "--j", "6", "--k", "2", "--format", "json")
    ws = [witness_from_dict(d) for d in json.loads(out)["witnesses"]]
    assert [w.numerators for w in ws] == [(1, 11), (3, 9), (5, 7)]


def test_count_and_closed_form(capsys):
    _, out, _ = run(capsys, "odd-count", "--j", "12", "--k", "4", "--h", "4", "--format", "json")
    assert json.loads(out)["count"] == "33"
    _, out, _ = run(capsys, "closed-form", "--j", "101", "--k", "7", "--format", "json")
    assert json.loads(out)["agree"] is True


def test_gaussian_text(capsys):
    _, out, _ = run(capsys, "gaussian", "--j", "6", "--h", "2", "--shifted")
    assert out == "q^{11}+q^{10}+2q^9+2q^8+3q^7+2q^6+2q^5+q^4+q^3\n"


def test_rascal_and_bijection(capsys):
    _, out, _ = run(capsys, "rascal", "--j", "6", "--check", "--format", "json")
    d = json.loads(out)
    assert d["rows"][6] == ["1", "6", "9", "10", "9", "6", "1"] and d["relationHolds"]
    _, out, _ = run(capsys, "bijection-check", "--j", "10", "--format", "json")
    assert all(json.loads(out)["results"].values())


def test_even_commands(capsys):
    _, out, _ = run(capsys, "even-count", "--t", "2..100", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 99 and all(r["F_E"] == r["scanned"] for r in rows)
    _, out, _ = run(capsys, "even-solve", "--t", "30", "--format", "json")
    assert len(json.loads(out)) == 6
    _, out, _ = run(capsys, "even-series", "--t", "6", "--format", "json")
    series = {(s["x"], s["y"]) for s in json.loads(out)}
    assert (3, 2) in series
    _, out, _ = run(capsys, "psi", "--t", "6", "--format", "json")
    assert json.loads(out)["roots"] == [2, 3, 5, 6]


def test_omega_json_round_trip(capsys):
    code, out, _ = run(capsys, "omega", "--z", "e", "--precision-bits", "128", "--format", "json")
    r = omega_from_dict(json.loads(out))
    assert code == 0 and r.precision_bits == 128
    assert abs(float(r.value.im) - 4.5323) < 5e-3


def test_precision_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("FRACPART_PRECISION_BITS", "80")
    _, out, _ = run(capsys, "omega", "--z", "2.5", "--format", "json")
    assert json.loads(out)["precisionBits"] == 80
    _, out, _ = run(capsys, "omega", "--z", "2.5", "--format", "json", "--precision-bits", "160")
    assert json.loads(out)["precisionBits"] == 160


def test_precision_exhausted_exit_code(capsys, monkeypatch):
    import fracpart.omega as om

    monkeypatch.setattr(om, "MAX_PRECISION", 64)
    code, _, err = run(capsys, "omega", "--z", "4+i", "--precision-bits", "128")
    assert code == 3 and "beyond" in err


def test_dirichlet(capsys):
    _, out, _ = run(capsys, "dirichlet", "--s", "3", "--T", "1000", "--format", "json")
    d = json.loads(out)
    assert float(d["difference"]) <= float(d["tailBound"])


def test_conjecture_exit_codes(capsys):
    code, out, _ = run(capsys, "conjecture", "modality", "--jmax", "30", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "consistent"
    code, out, _ = run(capsys, "conjecture", "custom", "--seq", "1,2,50,60", "--jmax", "4", "--format", "json")
    assert code == 2 and json.loads(out)["failures"][0] == [3, 2]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["odd-count", "--j", "2.5", "--k", "1"],
    ["odd-count", "--j", "5"],
    ["odd-table", "--jmax", "2"],
    ["even-count", "--t", "9..3"],
    ["omega", "--z", "-1"],
    ["odd-witness", "--j", "5", "--k", "9"],
    ["odd-table", "--jmax", "5", "--format", "xml"],
])
def test_usage_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_exact_decimal_integers(capsys):
    _, out, _ = run(capsys, "odd-count", "--j", "1.2e1", "--k", "4.0", "--h", "4")
    assert "| 12 | 4 | 4 | 33 |" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "fracpart", "odd-count", "--j", "6", "--k", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and "| 6 | 2 |  | 3 |" in r.stdout
