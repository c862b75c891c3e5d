from __future__ import annotations

import json
import subprocess
import sys

import pytest

from semigraphoids.cli import main


@pytest.fixture(scope="module")
def fxdir(tmp_path_factory, fx):
    d = tmp_path_factory.mktemp("fixtures")
    fx.export(d)
    return d


def run(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_axioms(capsys):
    code, out, _ = run(capsys, "axioms", 4)
    assert code == 0 and len(out.splitlines()) == 24
    code, out, _ = run(capsys, "axioms", 5, "--format", "eq")
    assert len(out.splitlines()) == 120 and " + " in out and " = " in out
    code, out, _ = run(capsys, "axioms", 2)
    assert code == 0 and out == ""


def test_axioms_eq_matches_transcribed_list(capsys, fx):
    _, out, _ = run(capsys, "axioms", 5, "--format", "eq")
    from semigraphoids.ci import parse_equation
    from semigraphoids.verify import fixture_equations

    assert sorted(parse_equation(l, 5) for l in out.splitlines()) == sorted(e for e, _, _ in fixture_equations(fx.axioms5, 5))


def test_bad_n_is_usage_error(capsys):
    assert run(capsys, "axioms", 1)[0] == 2
    assert run(capsys, "axioms", 7)[0] == 2


def test_check_m(capsys, fxdir):
    code, out, _ = run(capsys, "check", fxdir / "M4.txt")
    assert (code, out) == (0, "SEMIGRAPHOID\n")


def test_check_failure_names_axiom(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("1.2|\n1.3|2\n")
    code, out, _ = run(capsys, "check", f, "--n", 3)
    assert code == 1 and out.startswith("NOT_SEMIGRAPHOID\nviolated: ")


def test_submodular_m_and_gamma(capsys, fxdir):
    code, out, _ = run(capsys, "submodular", fxdir / "M4.txt")
    assert code == 1 and out.startswith("NOT_SUBMODULAR\ncertificate:")
    code, out, _ = run(capsys, "submodular", fxdir / "Gamma5.txt")
    assert code == 1 and out.startswith("NOT_SUBMODULAR")


def test_submodular_witness(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("1.2|\n")
    code, out, _ = run(capsys, "submodular", f, "--n", 4)
    assert code == 0 and out.startswith("SUBMODULAR\n")
    code, out, _ = run(capsys, "submodular", f, "--n", 4, "--form", "primal")
    assert code == 0 and out.startswith("SUBMODULAR\n")


def test_closure_of_empty_file(capsys, tmp_path):
    f = tmp_path / "empty.txt"
    f.write_text("")
    code, out, _ = run(capsys, "closure", f, "--n", 4)
    assert (code, out) == (0, "")
    code, out, _ = run(capsys, "closure", f, "--n", 4, "--json")
    assert json.loads(out)["statements"] == []


def test_coarsest(capsys, fxdir):
    assert run(capsys, "coarsest", fxdir / "Gamma5.txt")[1] == "COARSEST\n"


def test_parse_error_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1.2|\n  foo\n")
    code, out, err = run(capsys, "check", f)
    assert code == 2 and out == ""
    assert "line 2, column 3" in err


def test_missing_file_exit_2(capsys, tmp_path):
    assert run(capsys, "check", tmp_path / "nope.txt")[0] == 2


def test_unknown_subcommand_exit_2(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_enumerate(capsys):
    assert run(capsys, "enumerate", 3)[1] == "22\n"
    code, out, _ = run(capsys, "enumerate", 2, "--list")
    assert out == "{}\n1.2|\n"
    assert run(capsys, "enumerate", 5)[0] == 2


def test_imset_commands(capsys, fxdir):
    assert run(capsys, "imset", "structural", fxdir / "b5.imset")[1] == "STRUCTURAL\n"
    code, out, _ = run(capsys, "imset", "combinatorial", fxdir / "b5.imset")
    assert (code, out) == (1, "NOT_COMBINATORIAL\n")
    code, out, _ = run(capsys, "imset", "combinatorial", fxdir / "b5_doubled.imset")
    assert code == 0 and out.startswith("COMBINATORIAL\n")
    assert sum(1 for l in out.splitlines()[1:] if l) <= 16


def test_imset_fiber(capsys, tmp_path):
    f = tmp_path / "t.imset"
    f.write_text("1 1\n1 2\n-1 0\n-1 12\n")  # elementary imset of 1.2| with n = 2
    code, out, _ = run(capsys, "imset", "fiber", f)
    assert code == 0 and out == "fiber size 1\n# element 1\n1.2|\n"


def test_markov_commands(capsys, fxdir):
    assert run(capsys, "markov", "kernel", fxdir / "g.move")[1] == "IN_KERNEL\n"
    assert run(capsys, "markov", "indispensable", fxdir / "cubic4_1.move")[1] == "INDISPENSABLE\n"
    code, out, _ = run(capsys, "markov", "orbit", fxdir / "quartic4.move", "--json")
    assert json.loads(out)["orbits"][0]["size"] >= 1
    code, out, _ = run(capsys, "markov", "primes", "--n", 4)
    assert code == 0 and len(out.splitlines()) == 3
    assert run(capsys, "markov", "kernel")[0] == 2


def test_markov_connect(capsys, tmp_path):
    from semigraphoids.markov import axiom_moves

    f = tmp_path / "basis.move"
    f.write_text("".join(m.to_text() for m in axiom_moves(3)))
    code, out, _ = run(capsys, "markov", "connect", f, "--degree", 3)
    assert code == 0 and out.splitlines()[-1] == "CONNECTED"


def test_geometry_commands(capsys, fxdir, fx):
    code, out, _ = run(capsys, "geometry", "ranktest", fxdir / "M4.txt")
    assert code == 0 and len(out.splitlines()) == 16
    code, out, _ = run(capsys, "geometry", "statements", fxdir / "Gamma5.partition")
    assert len(out.splitlines()) == 44
    assert run(capsys, "geometry", "simplicial", fxdir / "M4.txt")[1] == "SIMPLICIAL\n"
    assert run(capsys, "geometry", "simplicial", fxdir / "Gamma5.txt")[0] == 1
    code, out, _ = run(capsys, "geometry", "fvector", fxdir / "polytope10.txt", "--lineality", "4,1,1,1,1")
    assert "f-vector (14, 36, 32, 10)" in out


def test_json_and_text_agree(capsys, fxdir):
    _, text, _ = run(capsys, "geometry", "fvector", fxdir / "polytope10.txt", "--lineality", "4,1,1,1,1")
    _, js, _ = run(capsys, "geometry", "fvector", fxdir / "polytope10.txt", "--lineality", "4,1,1,1,1", "--json")
    data = json.loads(js)
    assert f"vertices {data['vertices']}" in text
    assert "f-vector (" + ", ".join(map(str, data["f_vector"])) + ")" in text
    _, text, _ = run(capsys, "geometry", "statements", fxdir / "Gamma5.partition")
    _, js, _ = run(capsys, "geometry", "statements", fxdir / "Gamma5.partition", "--json")
    assert json.loads(js)["statements"] == text.split()


def test_export_fixtures(capsys, tmp_path, fx):
    code, out, _ = run(capsys, "--export-fixtures", tmp_path / "x")
    assert code == 0
    assert (tmp_path / "x" / "checksum.sha256").read_text().split()[0] == fx.checksum


@pytest.mark.parametrize(
    "args",
    [
        ["axioms", "5", "--format", "eq"],
        ["submodular", "{d}/Gamma5.txt"],
        ["geometry", "ranktest", "{d}/M4.txt"],
        ["markov", "orbit", "{d}/quartic4.move"],
    ],
)
def test_output_is_deterministic_across_processes(fxdir, args):
    argv = [a.format(d=fxdir) for a in args]
    outs = [
        subprocess.run([sys.executable, "-m", "semigraphoids", *argv], capture_output=True, check=False).stdout
        for _ in range(2)
    ]
    assert outs[0] == outs[1] and outs[0]


def test_golden_m_certificate(capsys, fxdir):
    _, out, _ = run(capsys, "submodular", fxdir / "M4.txt")
    assert out.splitlines()[1] == "certificate: 6 axiom equations, statements of M in brackets"
    assert out.splitlines()[-2] == "sum, with M set to zero: 0 = 1.4| + 2.3| + 3.4|12 + 1.2|34"
