import json
import os
import subprocess
import sys

import pytest

from schubkp.cli import main
from schubkp.polynomial import variable, elementary_symmetric
from schubkp.schubert import schubert
from schubkp.perm import simple
from schubkp.serialize import dumps, poly_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_schubert_command(capsys):
    code, out, _ = run(capsys, "schubert", "--perm", "3,1,2", "--n", "3")
    assert code == 0
    assert json.loads(out) == {"terms": [{"e": [2], "c": "1"}]}


def test_monk_command(capsys):
    code, out, _ = run(capsys, "monk", "--perm", "2,1", "--nu", "1")
    assert code == 0
    assert json.loads(out) == {"terms": [{"perm": [3, 1, 2], "coeff": "1"}]}


def test_expand_command(capsys, tmp_path):
    f = tmp_path / "f.json"
    f.write_text(dumps(poly_to_json(schubert(simple(1)))))
    code, out, _ = run(capsys, "expand", "--poly-file", str(f))
    assert code == 0
    assert json.loads(out) == {"terms": [{"perm": [2, 1], "coeff": "1"}]}
    f.write_text(dumps(poly_to_json(elementary_symmetric(2, 3))))
    _, out, _ = run(capsys, "expand", "--poly-file", str(f), "--n", "3")
    assert json.loads(out)["terms"] == [{"perm": [1, 3, 4, 2], "coeff": "1"}]


def test_expand_print_round_trip(capsys, tmp_path):
    f = tmp_path / "f.json"
    poly = variable(1) ** 2 * variable(2) - 3 * variable(3)
    f.write_text(dumps(poly_to_json(poly)))
    _, out, _ = run(capsys, "expand", "--poly-file", str(f))
    from schubkp.serialize import expansion_from_json
    from schubkp.schubert import expansion_to_poly
    assert expansion_to_poly(expansion_from_json(json.loads(out))) == poly


def test_kp_char_and_hom_dim(capsys):
    code, out, _ = run(capsys, "kp-char", "--perm", "1,4,3,2", "--module")
    data = json.loads(out)
    assert code == 0 and data["matches_schubert"] and data["dim"] == 5
    assert data["module"]["dim"] == 5
    code, out, _ = run(capsys, "hom-dim", "--perm", "2,1", "--perm2", "2,1", "--target", "3,1,2", "--n", "3")
    assert code == 0 and json.loads(out)["hom_dim"] == 1


def test_filtration_commands(capsys, tmp_path):
    cert = tmp_path / "c.json"
    code, _, _ = run(capsys, "monk-filtration", "--perm", "1,4,3,2", "--nu", "3", "--out", str(cert))
    assert code == 0
    code, out, _ = run(capsys, "verify-cert", "--cert", str(cert))
    assert code == 0 and json.loads(out)["valid"]
    data = json.loads(cert.read_text())
    data["steps"][0]["dim_F"] = 14
    cert.write_text(json.dumps(data))
    code, out, err = run(capsys, "verify-cert", "--cert", str(cert))
    assert code == 1 and not json.loads(out)["valid"] and "verification failed" in err
    code, out, _ = run(capsys, "iterated-filtration", "--perm", "1,3,2", "--nus", "1,2", "--table")
    assert code == 0 and out.splitlines()[0].split()[0] == "2,4,1,3"


def test_other_verifiers(capsys):
    code, out, _ = run(capsys, "tensor-verify", "--perm", "2,1", "--perm2", "1,3,2", "--n", "3")
    assert code == 0 and json.loads(out)["hom_ok"]
    code, out, _ = run(capsys, "t-w", "--perm", "1,4,3,2", "--n", "4")
    data = json.loads(out)
    assert code == 0 and data["dim_T"] == 6 and data["dim_N"] == 1
    code, out, _ = run(capsys, "schur-positivity", "--partition", "2", "--perm", "2,1", "--n", "2")
    assert code == 0 and json.loads(out)["expansion"]["terms"] == [{"perm": [3, 1, 2], "coeff": "1"}]
    code, out, _ = run(capsys, "product", "--perm", "2,1", "--perm2", "1,3,2")
    assert code == 0 and len(json.loads(out)["terms"]) == 2


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["schubert", "--perm", "1,1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "schubert", "--perm", "2,3,4,1", "--n", "2")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "expand", "--poly-file", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, _ = run(capsys, "monk", "--perm", "2,1", "--nu", "0")
    assert code == 2
    code, _, _ = run(capsys, "t-w", "--perm", "1,2,4,3", "--n", "3")
    assert code == 2


def test_resource_guards(capsys, monkeypatch):
    code, _, err = run(capsys, "verify-suite", "--n", "9")
    assert code == 3 and "resource" in err
    monkeypatch.setenv("SCHUBKP_MAX_DIM", "3")
    code, _, _ = run(capsys, "monk-filtration", "--perm", "1,4,3,2", "--nu", "3")
    assert code == 3
    monkeypatch.setenv("SCHUBKP_SUITE_MAX_RANK", "2")
    code, _, _ = run(capsys, "verify-suite", "--n", "3")
    assert code == 3


def test_verify_suite_small(capsys):
    code, out, _ = run(capsys, "verify-suite", "--n", "3")
    data = json.loads(out)
    assert code == 0 and data["passed"] and len(data["criteria"]) == 10


def _subprocess(*argv):
    env = dict(os.environ)
    return subprocess.run([sys.executable, "-m", "schubkp", *argv], capture_output=True, env=env)


def test_output_is_byte_stable():
    args = ("monk-filtration", "--perm", "2,4,1,3", "--nu", "2")
    a, b = _subprocess(*args), _subprocess(*args)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout


def test_module_entry_point_exit_code():
    assert _subprocess("verify-suite", "--n", "9").returncode == 3
