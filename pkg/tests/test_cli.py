import contextlib
import io
import json

import pytest

from toric_hodge import cli
from toric_hodge.fan import hirzebruch


def run(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(list(argv))
    text = buf.getvalue()
    return code, text, (json.loads(text) if text.strip() else None)


def test_cohomology_example():
    code, text, out = run("cohomology", "--fan", "builtin:P2", "--divisor", "[2,0,0]")
    assert code == 0
    assert text.strip() == '{"dims": [6, 0, 0]}'


def test_resolve_omega_example():
    code, _, out = run("resolve-omega", "--fan", "builtin:P2", "--p", "1")
    assert code == 0 and out["ranks"] == [3, 1] and out["rank_check"]


def test_resolve_omega_euler():
    code, _, out = run("resolve-omega", "--fan", "builtin:P3", "--p", "1", "--euler",
                       "--twist", "(2)", "--oracle", "Pn_bott")
    assert code == 0 and out["euler_check"]["passed"]


def test_check_pk_example():
    code, _, out = run("check-pk", "--fan", "builtin:F1", "--D", "[0,1,0,0]", "--k", "1",
                       "--L", "(2,1)")
    assert code == 0 and out["holds"] is True


def test_fan_check_and_picard():
    code, _, out = run("fan-check", "--fan", "builtin:P2xP1", "--intersections")
    assert code == 0 and out["smooth"] and out["complete"] and out["intersections_ok"]
    assert out["f_vector"] == [1, 5, 9, 6]
    code, _, out = run("picard", "--fan", "builtin:F2", "--divisor", "[1,1,0,0]")
    assert out["ray_classes"] == [[1, 0], [-2, 1], [1, 0], [0, 1]]
    assert out["class"] == [-1, 1]


def test_ample_nef():
    assert run("ample", "--fan", "builtin:F3", "--divisor-class", "(1,1)")[2] == {"ample": True}
    assert run("nef", "--fan", "builtin:F3", "--divisor", "[0,1,0,0]")[2] == {"nef": False}


def test_verify_vanishing_codes():
    code, _, out = run("verify-vanishing", "--fan", "builtin:P2", "--D-class", "(4)", "--k", "1",
                       "--L", "(1)", "--triviality", "smooth_D")
    assert code == 0 and out["status"] == "verified" and out["class"] == [6]
    code, _, out = run("verify-vanishing", "--fan", "builtin:F2", "--D", "[0,0,0,1]", "--k", "1",
                       "--L", "(2,1)", "--triviality", "smooth_D")
    assert code == 2 and out["status"] == "precondition_failed"


def test_conditions_and_jets():
    code, _, out = run("conditions", "--fan", "builtin:F2", "--D-class", "(1,2)", "--L", "(2,1)",
                       "--m", "2")
    assert code == 0 and out["class"] == [4, 3] and not out["precondition_met"]
    code, _, _ = run("conditions", "--fan", "builtin:F2", "--D-class", "(1,2)", "--L", "(2,1)",
                     "--m", "2", "--strict")
    assert code == 2
    code, _, out = run("jets", "--fan", "builtin:P3", "--D-class", "(5)", "--L", "(1)",
                       "--m", "3", "--j", "3")
    assert code == 0 and out["k"] == 3 and out["class"] == [17]


@pytest.mark.parametrize("argv", [
    ("cohomology", "--fan", "builtin:Q7", "--divisor", "[0]"),
    ("cohomology", "--fan", "builtin:P2", "--divisor", "[1,2]"),
    ("cohomology", "--fan", "builtin:P2", "--divisor", "[a,b,c]"),
    ("cohomology", "--fan", "/nonexistent/fan.json", "--divisor", "[0]"),
    ("cohomology", "--fan", "builtin:P2"),
    ("no-such-command",),
])
def test_malformed(argv):
    assert run(*argv)[0] == 1


def test_contract_exit():
    code, _, out = run("cohomology", "--fan", "builtin:P2", "--divisor", "[1/2,0,0]")
    assert code == 2 and out["kind"] == "ContractError"


def test_resource_exit():
    code, _, out = run("check-pk", "--fan", "builtin:F2", "--D", "[0,0,0,1]", "--k", "30",
                       "--L", "(70,1)", "--budget", "5")
    assert code == 4 and out["kind"] == "resource"


def test_fan_file(tmp_path):
    path = tmp_path / "f3.json"
    path.write_text(json.dumps(hirzebruch(3).to_json()))
    a = run("cohomology", "--fan", f"file:{path}", "--divisor", "[1,-2,0,3]")
    b = run("cohomology", "--fan", "builtin:F3", "--divisor", "[1,-2,0,3]")
    assert a == b and a[0] == 0


def test_byte_stable():
    argv = ("resolve-omega", "--fan", "builtin:P2xP1", "--p", "1", "--euler")
    assert run(*argv)[1] == run(*argv)[1]


def test_acceptance_command(capsys):
    code = cli.main(["acceptance"])
    captured = capsys.readouterr()
    out = json.loads(captured.out)
    assert code == 0 and out["passed"]
    assert captured.err.count("[PASS]") == 9
