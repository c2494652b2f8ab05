import json
import pathlib
import subprocess
import sys

import pytest

from conftest import cached
from hopfcat import cli, gallery, linalg as la

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def fixture_file(name):
    for suffix in (".hopf", ".semihopf"):
        path = FIXTURES / f"{name}{suffix}"
        if path.exists():
            return path
    raise FileNotFoundError(name)


@pytest.mark.parametrize("name", sorted(gallery.FIXTURES))
def test_fixture_files_match_gallery(name, capsys):
    code, out, _ = run(capsys, "gallery", "fixture", "--name", name)
    assert code == 0
    assert out == fixture_file(name).read_text()


@pytest.mark.parametrize("name", ["c4", "pair2", "sweedler", "km", "interval", "g_group"])
def test_json_round_trip(name):
    data = cached(name)
    back = cli.from_json(json.loads(cli.dumps(cli.to_json(data))))
    assert back.shape.dims == data.shape.dims and back.layers == data.layers
    for layer in ("comp", "unit", "local_comult", "local_counit", "antipode", "cocomp", "counit"):
        a, b = getattr(data, layer), getattr(back, layer)
        if a is not None:
            assert all(la.equal(a[k], b[k]) for k in a)


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", fixture_file("c4"), "--axioms", "hopf,category")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["results"]["hopf"]["ok"]


def test_check_reports_missing_antipode(capsys):
    code, out, _ = run(capsys, "check", fixture_file("km"), "--axioms", "semi-hopf,hopf")
    doc = json.loads(out)
    assert code == 1
    assert doc["results"]["semi-hopf"]["ok"] and doc["results"]["hopf"]["error"] == "NoAntipode"


def test_check_weak_hopf_on_packed_groupoid(tmp_path, capsys):
    packed = tmp_path / "packed.json"
    assert run(capsys, "synthesize", fixture_file("pair2"), "--target", "pack", "-o", packed)[0] == 0
    code, out, _ = run(capsys, "check", packed, "--axioms", "weak-hopf,hopf")
    doc = json.loads(out)
    assert doc["results"]["weak-hopf"]["ok"]
    assert not doc["results"]["hopf"]["ok"] and code == 1


def test_failing_check_has_counterexample(tmp_path, capsys):
    doc = json.loads(fixture_file("c2").read_text())
    entry = doc["entries"]["comp"][0]
    entry[-1] = str(la.q(entry[-1]) + 1)
    path = tmp_path / "broken.hopf"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", path, "--axioms", "hopf")
    report = json.loads(out)
    assert code == 1 and not report["ok"]
    assert report["results"]["hopf"]["first_counterexamples"]


def test_malformed_input_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.hopf"
    path.write_text("{\"format\": \"something else\"}")
    assert run(capsys, "check", path)[0] == 2
    path.write_text("not json")
    assert run(capsys, "check", path)[0] == 2


def test_unknown_axiom_exits_2(capsys):
    assert run(capsys, "check", fixture_file("c4"), "--axioms", "monoidal")[0] == 2


def test_bad_arguments_exit_2(capsys):
    assert run(capsys, "synthesize", fixture_file("c4"))[0] == 2
    assert run(capsys, "gallery", "group", "--table", "c9")[0] == 2


def test_integrals_command(capsys):
    code, out, _ = run(capsys, "integrals", fixture_file("sweedler"), "--side", "right")
    doc = json.loads(out)
    assert code == 0
    assert doc["spaces"]["*"]["dimension"] == 1
    assert doc["spaces"]["*"]["basis"][0]["*,*"] == ["0", "0", "1", "-1"]
    assert doc["nonsingularity"]["left_nonsingular"]


def test_synthesize_antipode_restores_fixture(tmp_path, capsys):
    doc = json.loads(fixture_file("c4").read_text())
    del doc["entries"]["antipode"]
    doc["layers"].remove("antipode")
    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "synthesize", bare, "--target", "antipode")
    assert code == 0 and out == fixture_file("c4").read_text()


def test_synthesize_antipode_fails_for_km(capsys):
    code, _, err = run(capsys, "synthesize", fixture_file("km"), "--target", "antipode")
    assert code == 1 and "NoAntipode" in err


def test_synthesize_frobenius_then_check(tmp_path, capsys):
    out = tmp_path / "frob.json"
    assert run(capsys, "synthesize", fixture_file("sweedler"), "--target", "frobenius", "-o", out)[0] == 0
    code, text, _ = run(capsys, "check", out, "--axioms", "frobenius,hopf")
    assert code == 0, text


def test_synthesize_dual_is_hopf_op(tmp_path, capsys):
    out = tmp_path / "dual.json"
    assert run(capsys, "synthesize", fixture_file("s3"), "--target", "dual", "-o", out)[0] == 0
    assert run(capsys, "check", out, "--axioms", "hopf-op")[0] == 0


@pytest.mark.parametrize("name", ["c4", "km", "interval", "pair2"])
def test_ls_report_command(name, capsys):
    code, out, _ = run(capsys, "ls-report", fixture_file(name))
    doc = json.loads(out)
    assert code == 0 and doc["consistent"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfcat", "check", str(fixture_file("c2")), "--axioms", "hopf"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["ok"]


def test_synthesize_frobenius_on_c4_gives_inverse_pair_casimir(capsys):
    code, out, _ = run(capsys, "synthesize", fixture_file("c4"), "--target", "frobenius")
    doc = json.loads(out)
    (casimir,) = doc["candidates"]["casimirs"]
    (trace,) = doc["candidates"]["traces"]
    assert code == 0
    # e(x)e + g(x)g^3 + g^2(x)g^2 + g^3(x)g, with every coefficient equal
    assert sorted(e[1] for e in casimir) == [0, 7, 10, 13] and len({e[-1] for e in casimir}) == 1
    assert len(trace) == 1 and trace[0][1] == 0
