import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from agtop import instances
from agtop.cli import main
from agtop.table import emit_table, parse_stream, parse_table

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="t.agt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_check_z3(write):
    code, out = run("check", write(emit_table(instances.cyclic_subtraction(3))))
    assert code == 0
    assert "left identities: {0}" in out
    assert "left-invertive: OK" in out
    assert "zero: none" in out


def test_check_json(write):
    code, out = run("check", write(emit_table(instances.cyclic_multiplication(6))), "--json")
    data = json.loads(out)
    assert code == 0 and data["zero"] == 0 and data["leftIdentities"] == [1]
    assert data["anti-rectangular"] == {"holds": False, "witness": [1, 0]}


def test_check_not_left_invertive(write, capsys):
    code, out = run("check", write("2\n0 0\n1 1\n"))
    assert code == 3
    assert "left-invertive: FAIL at (0, 0, 1)" in out


def test_parse_error_exit_code(write, capsys):
    code, _ = run("check", write("2\n0 0\n0 2\n"))
    assert code == 2
    assert "line 3" in capsys.readouterr().err


def test_missing_file(tmp_path):
    code, _ = run("check", str(tmp_path / "nope.agt"))
    assert code == 2


def test_ideals_requires_ag(write, capsys):
    code, _ = run("ideals", write("2\n0 0\n1 1\n"))
    assert code == 3
    assert "not left-invertive" in capsys.readouterr().err


def test_ideals_bi_z3(write):
    code, out = run("ideals", write(emit_table(instances.cyclic_subtraction(3))), "--kind=bi")
    assert code == 0
    assert out == "1 bi ideals\n{0,1,2}\n"


def test_ideals_predicates_json():
    code, out = run("ideals", str(GOLDEN / "z6.agt"), "--predicates", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 5
    primes = [row["members"] for row in data["family"] if row["prime"]]
    assert primes == [[0, 3], [0, 2, 4], [0, 2, 3, 4], [0, 1, 2, 3, 4, 5]]
    assert data["family"][0] == {"members": [0], "idempotent": True, "prime": False,
                                 "semiprime": True, "stronglyIrreducible": False}


def test_ideals_left_has_quasi_prime():
    code, out = run("ideals", str(GOLDEN / "z6.agt"), "--kind=left", "--predicates", "--json")
    assert all("quasiPrime" in row for row in json.loads(out)["family"])


def test_topology_no_zero(write):
    path = write(emit_table(instances.cyclic_subtraction(3)))
    code, out = run("topology", path)
    assert code == 0 and out == "not-applicable: no zero\n"
    code, out = run("topology", path, "--json")
    assert json.loads(out) == {"space": "spectrum", "status": "notApplicable", "note": "no zero"}


def test_topology_text_and_dot():
    code, out = run("topology", str(GOLDEN / "z6.agt"))
    assert code == 0
    assert "points (3):" in out and "topology axioms: holds" in out
    code, out = run("topology", str(GOLDEN / "z6.agt"), "--space=omega", "--dot")
    assert code == 0 and out.startswith("digraph specialization {")


def test_topology_golden_bytes():
    code, out = run("topology", str(GOLDEN / "z6.agt"), "--space=spectrum", "--json")
    assert code == 0
    assert out == (GOLDEN / "z6_spectrum.json").read_text()


def test_enumerate_usage_errors(capsys):
    assert run("enumerate", "--order=9")[0] == 1
    assert run("enumerate", "--order=2", "--limit=0")[0] == 1
    assert run("enumerate")[0] == 1
    assert run("frobnicate")[0] == 1


def test_enumerate_stream_round_trip():
    code, out = run("enumerate", "--order=2")
    tables = parse_stream(out)
    assert code == 0 and len(tables) == 6
    from agtop.table import emit_stream

    assert emit_stream(tables) == out


def test_enumerate_census():
    code, out = run("enumerate", "--order=3", "--iso", "--census")
    data = json.loads(out)
    assert code == 0 and data["total"] == 20
    assert data["associative"] + data["nonAssociative"] == 20


def test_verify_usage_errors(capsys):
    assert run("verify", "--order=2", "--claims=C99")[0] == 1
    assert run("verify")[0] == 1
    assert run("verify", "--order=9")[0] == 1


def test_verify_exit_codes(write):
    # asserted claims hold on Z6; the positional permutation identity does not
    path = str(GOLDEN / "z6.agt")
    assert run("verify", path, "--claims=C1,C2,C12")[0] == 0
    code, out = run("verify", path, "--claims=C3", "--json")
    assert code == 4
    w = json.loads(out)["claims"]["C3"]["witnesses"][0]
    assert parse_table(w["table"]) == instances.cyclic_multiplication(6)
    bad = write("2\n0 0\n1 1\n")
    assert run("verify", bad)[0] == 3


def test_verify_order(monkeypatch):
    code, out = run("verify", "--order=2", "--iso", "--claims=C1,C21")
    assert code == 0
    assert "corpus size: 3" in out


def test_canon(write):
    swapped = "2\n1 0\n0 1\n"
    code, out = run("canon", write(swapped))
    assert code == 0 and out == emit_table(instances.cyclic_addition(2))


def test_cap_exit_code(write, monkeypatch):
    monkeypatch.setenv("AGTOP_MAX_N", "4")
    code, _ = run("ideals", str(GOLDEN / "z6.agt"))
    assert code == 5


def test_round_trip_byte_identity(write):
    text = (GOLDEN / "z6.agt").read_text()
    assert emit_table(parse_table(text)) == text
    code, out = run("canon", write(text))
    assert code == 0
    assert run("canon", write(out, "again.agt"))[1] == out


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "agtop", "check", str(GOLDEN / "z6.agt")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "zero: 0" in proc.stdout
