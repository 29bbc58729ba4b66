import json
import subprocess
import sys

import pytest

from ghspace import load_space, save_space, simplex, single_point, validate_metric
from ghspace.cli import main


@pytest.fixture
def files(tmp_path, triangle345, equilateral):
    paths = {}
    for name, X in {
        "t345": triangle345,
        "t30": triangle345.scaled(10),
        "equi": equilateral,
        "point": single_point(),
        "seg": simplex(2),
    }.items():
        paths[name] = tmp_path / f"{name}.json"
        save_space(X, paths[name])
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 3\n1 0 1\n3 1 0\n")
    paths["bad"] = bad
    broken = tmp_path / "broken.json"
    broken.write_text('{"dist": [[0, 1], [1, 0]')
    paths["broken"] = broken
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys, files):
    code, out, _ = run(capsys, "validate", files["t345"])
    assert code == 0
    assert out.split() == ["n=3", "diam=5", "delta=1", "generic=true"]


def test_validate_violation(capsys, files):
    code, _, err = run(capsys, "validate", files["bad"])
    assert code == 1 and "TriangleViolation(0,2,1)" in err


def test_validate_malformed(capsys, files):
    code, _, err = run(capsys, "validate", files["broken"])
    assert code == 2 and "ParseError" in err


def test_dist(capsys, files):
    code, out, _ = run(capsys, "dist", files["point"], files["seg"], "--exact")
    assert code == 0 and out.split()[0] == "1/2"
    code, out, _ = run(capsys, "dist", files["t345"], files["t345"])
    assert out.split()[0] == "0"
    code, out, _ = run(capsys, "dist", files["t345"], files["t30"], "--bound")
    assert out.split()[0] == "25"


def test_dist_json(capsys, files):
    code, out, _ = run(capsys, "dist", files["point"], files["seg"], "--json")
    assert json.loads(out)["distance"] == "1/2"


def test_dist_cap(capsys, files, tmp_path):
    big = tmp_path / "big.json"
    save_space(simplex(4), big)
    code, _, err = run(capsys, "dist", big, files["seg"], "--solver-cap", "3")
    assert code == 1 and "--bound" in err


def test_embed_verify(capsys, files, tmp_path):
    out_dir = tmp_path / "emb"
    code, out, _ = run(capsys, "embed", files["seg"], "--out", out_dir, "--verify")
    assert code == 0 and "k=3" in out and "verify=pass" in out
    images = sorted(out_dir.glob("image_*.json"))
    assert len(images) == 2
    assert all(load_space(p).n == 3 for p in images)
    report = json.loads((out_dir / "verify.json").read_text())
    assert report["passed"] and report["pairs"][0]["computed"] == "1"


def test_embed_345(capsys, files, tmp_path):
    code, out, _ = run(capsys, "embed", files["t345"], "--out", tmp_path / "e", "--verify", "--format", "matrix")
    assert code == 0
    assert len(list((tmp_path / "e").glob("image_*.txt"))) == 3
    computed = sorted(line.split()[2] for line in out.splitlines() if line.startswith("d_GH"))
    assert computed == ["3", "4", "5"]


def test_embed_point(capsys, files, tmp_path):
    code, out, _ = run(capsys, "embed", files["point"], "--out", tmp_path / "p")
    assert code == 0 and "k=2 images=1" in out


def test_sample_generic(capsys, tmp_path):
    code, out, _ = run(capsys, "sample-generic", "--n", 4, "--seed", 1)
    code2, out2, _ = run(capsys, "sample-generic", "--n", 4, "--seed", 1)
    assert code == code2 == 0 and out == out2
    path = tmp_path / "g.json"
    path.write_text(out)
    code, out, _ = run(capsys, "validate", path)
    assert "generic=true" in out


def test_demo(capsys, tmp_path):
    code, out, _ = run(capsys, "demo-nonuniversality", "--samples", 15, "--seed", 3, "--out", tmp_path / "demo.json")
    assert code == 0
    assert "d_GH(Delta_1, Delta_2) = 1/2" in out
    assert "d(A,B)=1/2; all sampled candidates for C satisfy d(B,C) <= 1/2 != 2/3" in out
    assert json.loads((tmp_path / "demo.json").read_text())["passed"]


def test_check_isometry(capsys, files, tmp_path):
    code, out, _ = run(capsys, "check-isometry", files["t345"], "--samples", 30, "--seed", 4, "--out", tmp_path / "r.json")
    assert code == 0 and "passed=30" in out
    code, _, err = run(capsys, "check-isometry", files["equi"], "--samples", 3)
    assert code == 1 and "NotGeneric" in err
    code, out, _ = run(capsys, "check-isometry", files["seg"], "--samples", 10)
    assert code == 0 and "passed=10" in out


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["dist"])
    assert info.value.code == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "ghspace", "validate", str(files["seg"])], capture_output=True, text=True)
    assert proc.returncode == 0 and "n=2" in proc.stdout
