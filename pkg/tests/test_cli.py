import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from acis.cli import run
from acis.quadform import signature_exact

from cases import FIRST_QUARTIC, SEXTIC


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


def test_signature_report_round_trips():
    code, rep, _ = call_json("signature", "--vars", "x,y,z", "-f", FIRST_QUARTIC)
    assert code == 0
    assert {"dim_M", "hilbert", "socle_degree", "mode", "gram", "signature", "seed"} <= set(rep)
    gram = [[Fraction(v) for v in row] for row in rep["gram"]]
    p, m, z = signature_exact(gram)
    assert p - m == rep["signature"] == -3
    assert len(gram) == rep["dim_M"] == 7 and z == 0


def test_euler_and_verify():
    code, rep, _ = call_json("euler", "--vars", "x,y,z", "-f", "x^2+y^2+z^2")
    assert code == 0 and (rep["chi_plus"], rep["chi_minus"]) == (1, 0)
    code, rep, _ = call_json("verify", "--vars", "x,y,z", "-f", FIRST_QUARTIC)
    assert code == 0 and rep["holds"] and rep["difference"] == rep["sigma"] == -3


def test_hilbert_and_module():
    code, rep, _ = call_json("hilbert", "--vars", "x,y,z", "-f", SEXTIC)
    assert code == 0 and rep["hilbert"] == "2t^5+3t^6+2t^7" and rep["symmetric"]
    code, rep, _ = call_json("module", "--vars", "x,y", "--ideal", "x*y;x^2")
    assert rep["dim_M"] == 1 and rep["saturation"] == ["x"]


def test_conjecture_evlevine_branches_pencil():
    _, rep, _ = call_json("conjecture", "--vars", "x,y,z", "-f", SEXTIC)
    assert rep["quotient_hilbert"] == "2t^10+2t^11" and rep["hessian_degree"] == 12
    assert not any(rep["parts"].values())
    _, rep, _ = call_json("evlevine", "--vars", "x,y", "--ideal", "x^2;y")
    assert rep["signature"] == 0 and rep["socle_ok"]
    _, rep, _ = call_json("branches", "--vars", "x,y", "-f", "x^2-y^2")
    assert rep["branches"] == 4
    _, rep, _ = call_json(
        "pencil", "--vars", "x,y,z", "--ideal", "z^2*(x^2+y^2)+x^4+y^4;z^2*(x^2+y^2)+x^4+3*x^2*y^2+y^4",
        "--samples", "0,1/2,1",
    )
    assert rep["constant"] and rep["values"] == [0]


def test_weights_option():
    _, rep, _ = call_json("signature", "--vars", "x,y,z", "--weights", "1,2,2", "-f", "x^2*y-z^2")
    assert rep["weights"] == [1, 2, 2] and rep["signature"] == 1


@pytest.mark.parametrize(
    "argv,code,reason",
    [
        (["signature", "--vars", "x,y", "-f", "x^2+y^2"], 2, "zero-dimensional"),
        (["signature", "--vars", "x,y", "-f", "2x"], 2, "ParseError"),
        (["signature", "--vars", "x,y,z", "-f", SEXTIC, "--mode", "hessian"], 2, "socle"),
        (["euler", "--vars", "x,y,z", "-f", "x^3"], 2, "EulerError"),
        (["signature", "--vars", "x,y", "--weights", "1", "-f", "x"], 2, "UsageError"),
        (["signature", "--vars", "x,y"], 2, "UsageError"),
        (["pencil", "--vars", "x,y", "--ideal", "x^2*y"], 2, "UsageError"),
    ],
)
def test_precondition_exit_codes(argv, code, reason):
    got, out, err = call(*argv)
    assert got == code and out == ""
    assert json.loads(err)["reason"] == reason


def test_verify_failure_exit_code(monkeypatch):
    import acis.cli as cli
    from acis.realtopo.euler import verify_signature_theorem

    def broken(F, mode="auto", seed=0):
        rep = verify_signature_theorem(F, mode, seed)
        rep.holds = False
        return rep

    monkeypatch.setattr(cli, "verify_signature_theorem", broken)
    code, _, _ = call("verify", "--vars", "x,y,z", "-f", "x^2+y^2+z^2")
    assert code == 3


def test_internal_error_exit_code(monkeypatch):
    import acis.cli as cli
    from acis.gorenstein import InternalCheckError

    def boom(*a, **k):
        raise InternalCheckError("forced")

    monkeypatch.setattr(cli, "signature", boom)
    code, _, err = call("signature", "--vars", "x,y", "-f", "x^2*y")
    assert code == 4 and json.loads(err)["reason"] == "InternalCheckError"


COMMANDS = [
    ["signature", "--vars", "x,y,z", "-f", SEXTIC, "--mode", "homological", "--seed", "5"],
    ["euler", "--vars", "x,y,z", "-f", FIRST_QUARTIC],
    ["verify", "--vars", "x,y,z", "-f", FIRST_QUARTIC],
    ["hilbert", "--vars", "x,y", "--ideal", "x*y;x^2"],
    ["module", "--vars", "x,y,z", "-f", FIRST_QUARTIC],
    ["conjecture", "--vars", "x,y", "--ideal", "x*y;x^2"],
    ["evlevine", "--vars", "x,y", "--ideal", "x^2;y"],
    ["branches", "--vars", "x,y", "-f", "x*y"],
    ["pencil", "--vars", "x,y,z", "--ideal", f"{FIRST_QUARTIC};{FIRST_QUARTIC}", "--samples", "0,1"],
    ["plot", "--vars", "x,y,z", "-f", "x^2+y^2-z^2"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=[a[0] for a in COMMANDS])
def test_byte_identical_reruns(argv):
    first = call(*argv, "--format", "json")
    second = call(*argv, "--format", "json")
    assert first[0] == 0 and first == second
    rep = json.loads(first[1])
    assert rep["seed"] == (5 if "--seed" in argv else 0)


def test_svg_plot():
    code, svg, _ = call("plot", "--vars", "x,y,z", "-f", "x^2+y^2-z^2", "--format", "svg")
    assert code == 0 and svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<polyline") == 2  # upper and lower arc of the circle
    assert call("signature", "--vars", "x,y", "-f", "x^2*y", "--format", "svg")[0] == 2


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "acis.cli", "branches", "--vars", "x,y", "-f", "x", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["branches"] == 2
