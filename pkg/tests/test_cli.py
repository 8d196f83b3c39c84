import io
import json
import subprocess
import sys

import pytest

from gradedideals.cli import main

TAIL = "x^2, x*y, y^3, x - y^2"
QUARTIC = "x^4, x^2*y^2, y^4, x^3*y - x*y^3"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_star_golden():
    assert run("star", "--ring", "QQ[x,y]", "--grading", "[[1,1]]", TAIL) == (0, "x^2, x*y, y^3\n", "")


def test_ir_golden():
    assert run("ir", "--ring", "QQ[x,y]", QUARTIC)[:2] == (0, "3\n")
    assert run("ir", TAIL)[:2] == (0, "1\n")
    assert run("ir", "x^2, x*y, y^3")[:2] == (0, "2\n")
    # monomial but not m-primary: decomposition count
    assert run("ir", "x*y")[:2] == (0, "2\n")
    code, _, err = run("ir", "x^2 - y")
    assert code == 3 and "precondition" in err


def test_socle_golden():
    code, out, _ = run("socle", QUARTIC)
    assert code == 0
    assert out == "rank 3\nbasis x*y^3, x^3 - x*y^2, x^2*y - y^3\n"
    code, _, err = run("socle", "x*y")
    assert code == 3 and "precondition violated" in err


def test_ideal_operations():
    assert run("gb", "--order", "lex", "y^3, x - y^2, x*y")[1] == "x - y^2, y^3\n"
    assert run("gb", "x^2 + 1, x^2")[1] == "1\n"
    assert run("member", "y^2", "x^2 - y, x*y")[1] == "true\n"
    assert run("member", "x", "x^2 - y, x*y")[1] == "false\n"
    assert run("intersect", "x^2, y", "x, y^3")[1] == "x^2, x*y, y^3\n"
    assert run("quotient", "x^2, x*y, y^3", "x, y")[1] == "x, y^2\n"
    assert run("saturate", "x*y, x^2 - x", "x")[1] == "x - 1, y\n"
    assert run("saturate", "x*y, x^2", "x")[1] == "1\n"
    assert run("eliminate", "--ring", "QQ[t,x,y]", "x - t^2, y - t^3", "t")[1] == "x^3 - y^2\n"
    assert run("isgraded", TAIL)[1] == "false\n"
    assert run("isgraded", "x^2, x*y")[1] == "true\n"


def test_monomial_commands():
    assert run("decompose", "x^2, x*y, y^3")[1] == "(x, y^3)\n(y, x^2)\n"
    assert run("minprimes", "--ring", "QQ[x,y,z]", "x*y, x*z")[1] == "(x)\n(y, z)\n"
    code, _, err = run("decompose", TAIL)
    assert code == 3
    code, _, _ = run("minprimes", "x^2*y")
    assert code == 3


def test_points_command():
    code, out, _ = run("points", "(1,1); (2,3)")
    assert code == 0
    assert "ir(I) 2\nir(I*) 2\nbijective true\n" in out
    assert out.endswith("I* x^2 - 5/3x*y + 2/3y^2\n")
    code, out, _ = run("points", "(0,1); (0,2); (0,3)")
    assert "ir(I) 3\nir(I*) 1\nbijective false\nI* x\n" in out
    assert run("points", "(0,0)")[0] == 2
    assert run("points", "(1,1); (1,1)")[0] == 2


def test_gfree(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text(
        "gfield GF(7) rank 2 support (1,0; 0,1)\n"
        "rowdeg (0,0); (1,0); (0,1)\n"
        "coldeg (-1,0)\n"
        "1*e(1,0)\n2*e(2,0)\n0\n"
    )
    code, out, _ = run("gfree", str(path))
    assert code == 0
    assert out == "rank 1\nfree rank 2\ngenerator degrees (1,0); (0,1)\nunit pivots only true\n"
    assert run("gfree", str(tmp_path / "missing.txt"))[0] == 2


def test_json_output():
    code, out, _ = run("star", "--format", "json", TAIL)
    assert code == 0
    assert json.loads(out) == {"command": "star", "result": {"generators": ["x^2", "x*y", "y^3"]}}
    data = json.loads(run("socle", "--format", "json", TAIL)[1])
    assert data["result"]["rank"] == 1


def test_usage_errors():
    code, _, err = run("gb", "x^2 +")
    assert code == 2 and "position 6" in err
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2
    assert run("gb", "--ring", "QQ[x,y", "x")[0] == 2
    assert run("gb", "z")[0] == 2
    assert run("star", "--grading", "[[1,1,1]]", "x")[0] == 2


def test_verify_worked_examples():
    code, out, _ = run("verify", "paper")
    assert code == 0
    assert "FAIL" not in out and "PASS" in out


def test_verify_random_small():
    code, out, _ = run("verify", "random", "--seed", "3", "--cases", "3")
    assert code == 0
    assert out.count("checks passed") == 5


def test_session_references(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text(
        "ring QQ[x,y]\n"
        f"ideal I = {TAIL}\n"
        f"ideal J = {QUARTIC}\n"
        "points P = (0,1); (0,2); (0,3)\n"
        "matrix A = gfield QQ rank 1 support (1) | rowdeg (0) | coldeg (1) | 2*e(-1)\n"
    )
    s = str(path)
    assert run("star", "--session", s, "@I")[1] == "x^2, x*y, y^3\n"
    assert run("ir", "--session", s, "@J")[1] == "3\n"
    assert "ir(I*) 1" in run("points", "--session", s, "@P")[1]
    assert run("gfree", "--session", s, "@A")[1].startswith("rank 1\nfree rank 0\n")
    assert run("star", "--session", s, "@K")[0] == 2
    assert run("star", "--session", str(tmp_path / "nope"), "@I")[0] == 2


def test_deterministic_output():
    a = run("verify", "random", "--seed", "11", "--cases", "2", "--format", "json")[1]
    b = run("verify", "random", "--seed", "11", "--cases", "2", "--format", "json")[1]
    assert a == b and json.loads(a)[0]["seed"] == 11
    assert run("socle", QUARTIC) == run("socle", QUARTIC)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gradedideals", "star", TAIL], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "x^2, x*y, y^3\n"
