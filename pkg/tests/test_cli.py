import io
import json
import os
import subprocess
import sys

import pytest

from pauli_geometry import claims
from pauli_geometry.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    return code, json.loads(text)


def test_single_quartit_example():
    code, rep = call_json("single", "4", "--cliques", "--intersect", "0")
    assert code == 0
    assert rep["schema"] == 1 and rep["command"][:2] == ["single", "4"]
    assert rep["observables"] == 15 and rep["cliques"]["count"] == 7
    dual = rep["intersections"][0]
    assert dual["degree_histogram"] == {"0": 1, "4": 6}
    assert [(e["value"], e["multiplicity"]) for e in dual["spectrum"]] == [(4, 1), (0, 4), (-2, 2)]
    assert all(e["certified"] for e in dual["spectrum"])


def test_mixture_example():
    code, text = call("mixture", "4x3", "--cliques")
    assert code == 0
    assert "observables: 143" in text and "cliques: 28" in text


def test_single_and_mixture_are_distinct_systems():
    _, a = call_json("single", "12")
    _, b = call_json("mixture", "4x3")
    assert a["dims"] == "12" and b["dims"] == "4x3"
    _, c = call_json("mixture", "3x4")
    assert c["dims"] == "3x4"


def test_arith_examples():
    code, rep = call_json("arith", "--range", "1..1")
    assert code == 0 and rep["table"] == [{"n": 1, "sigma": 1, "psi": 1, "phi": 1, "J2": 1}]
    _, rep = call_json("arith", "--range", "4..4")
    assert rep["table"][0] == {"n": 4, "sigma": 7, "psi": 6, "phi": 2, "J2": 12}


def test_robin_and_psicrit():
    code, rep = call_json("robin", "--max", "6000")
    assert code == 0 and rep["largest_positive"] == 5040 and rep["negative_from"] == 5041
    code, rep = call_json("psicrit", "--max", "40")
    assert code == 0 and max(rep["not_positive"], default=0) < 31


def test_multi_two_qubit_full():
    code, rep = call_json("multi", "2", "2", "--spectrum", "--aut", "--puncture", "IX", "--intersect", "0")
    assert code == 0
    assert rep["srg"] == [15, 6, 1, 3] and rep["automorphisms"]["order"] == 720
    assert rep["puncture"] == {"removed": "IX", "cliques_left": 12}
    k0 = rep["intersections"][0]
    assert [(e["value"], e["multiplicity"]) for e in k0["spectrum"]] == [(6, 1), (2, 3), (0, 2), (-2, 6)]
    assert k0["automorphisms"]["order"] == 48


def test_puncture_by_index():
    code, rep = call_json("multi", "2", "3", "--puncture", "0", "--intersect", "0")
    assert code == 0 and rep["puncture"]["cliques_left"] == 120


def test_polar_command():
    code, rep = call_json("polar", "2", "2", "--spreads", "10", "--crosscheck", "--aut")
    assert code == 0
    assert rep["points"] == 15 and rep["generators"] == 15 and rep["generator_vectors"] == 3
    assert rep["spreads"]["found"] == 6 and rep["spreads"]["sizes"] == [5]
    assert rep["crosscheck"] is True and rep["automorphisms"]["order"] == 720


def test_dot_export(tmp_path):
    path = tmp_path / "g.dot"
    code, rep = call_json("multi", "2", "2", "--dot", str(path))
    assert code == 0 and rep["dot"] == str(path)
    text = path.read_text(encoding="utf-8")
    assert text.startswith("graph G {") and text.count(" -- ") == 45


def test_observables_command(tmp_path):
    path = tmp_path / "obs.txt"
    path.write_text("# a commuting triple and one more\nXX\nYY\nZZ\nXI\n", encoding="utf-8")
    code, rep = call_json("observables", str(path), "--cliques")
    assert code == 0 and rep["dims"] == "2x2" and rep["observables"] == 4
    assert rep["cliques"]["members"] == [["XX", "YY", "ZZ"], ["XX", "XI"]]
    exp = tmp_path / "exp.txt"
    exp.write_text("1,0;0,0\n0,1;0,0\n", encoding="utf-8")
    code, rep = call_json("observables", str(exp), "--dims", "4x3")
    assert code == 0 and rep["observables"] == 2 and rep["edges"] == 0
    code, _ = call("observables", str(exp))
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["single"],
        ["single", "4", "--no-such-flag"],
        ["single", "1"],
        ["mixture", "4y3"],
        ["arith", "--range", "5..2"],
        ["polar", "4", "2"],
        ["multi", "2", "2", "--puncture", "QQ", "--intersect", "0"],
        ["multi", "2", "2", "--puncture", "99"],
        ["single", "100"],
        ["robin", "--max", "2"],
    ],
)
def test_validation_failures_exit_2(argv, capsys):
    code, _ = call(*argv)
    assert code == 2


def test_budget_exhaustion_exit_3():
    code, _ = call("multi", "2", "3", "--aut", "--budget", "3")
    assert code == 3


def test_json_is_deterministic():
    args = ("mixture", "2x2x3", "--cliques", "--spectrum", "--intersect", "5", "--aut")
    assert call_json(*args)[1] == call_json(*args)[1]
    assert call(*args, "--json")[1] == call(*args, "--json")[1]


def test_single_qutrit():
    # sigma(3) = 4 lines of two observables each
    _, rep = call_json("single", "3", "--cliques")
    assert rep["observables"] == 8 and rep["edges"] == 4 and rep["cliques"]["sizes"] == {"2": 4}


# reproduce


FAST = ["quartit.cliques", "two_qubit.spectrum", "two_qubit.aut", "mixture.two_by_three_is_six"]


def test_reproduce_injected_failure():
    rep = claims.reproduce_paper({"two_qubit.aut": 721}, workers=1, ids=FAST)
    by_id = {c["id"]: c for c in rep["claims"]}
    assert not by_id["two_qubit.aut"]["passed"]
    assert by_id["two_qubit.aut"]["computed"] == 720 and by_id["two_qubit.aut"]["expected"] == 721
    assert rep["failed"] == 1 and rep["passed"] == len(FAST) - 1


def test_reproduce_exit_code_on_failure(monkeypatch):
    monkeypatch.setattr(claims, "CLAIMS", [
        claims.Claim("x.wrong", 0, "an injected wrong value", 2, lambda: 1),
        *[c for c in claims.CLAIMS if c.id in FAST],
    ])
    code, text = call("reproduce")
    assert code != 0
    assert text.splitlines()[0].startswith("FAIL") and "x.wrong" in text


def test_reproduce_unknown_ids():
    with pytest.raises(ValueError):
        claims.reproduce_paper({"no.such": 1}, workers=1)


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv(claims.THREADS_ENV, "3")
    assert claims.worker_count() == 3
    monkeypatch.setenv(claims.THREADS_ENV, "zero")
    with pytest.raises(ValueError):
        claims.worker_count()
    monkeypatch.delenv(claims.THREADS_ENV)
    assert claims.worker_count() >= 1


def test_claim_ids_unique():
    ids = [c.id for c in claims.CLAIMS]
    assert len(ids) == len(set(ids))
    assert {c.criterion for c in claims.CLAIMS} == set(range(1, 13))


def _reproduce_subprocess(threads):
    env = dict(os.environ, PAULI_GEOMETRY_THREADS=str(threads))
    proc = subprocess.run(
        [sys.executable, "-m", "pauli_geometry", "reproduce", "--json"], capture_output=True, env=env
    )
    return proc.returncode, proc.stdout


def test_full_reproduce_is_complete_and_deterministic():
    code1, out1 = _reproduce_subprocess(1)
    code2, out2 = _reproduce_subprocess(2)
    assert code1 == 0 and code2 == 0
    assert out1 == out2
    rep = json.loads(out1)
    assert rep["schema"] == 1 and rep["failed"] == 0
    assert sorted(c["id"] for c in rep["claims"]) == sorted(c.id for c in claims.CLAIMS)
