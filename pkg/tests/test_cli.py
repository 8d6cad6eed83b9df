import io
import json
import subprocess
import sys

import numpy as np
import pytest

from signedspec.cli import run
from signedspec.core import complete_graph, cycle_graph, negate, path_graph, sk8, unbalanced_triangle
from signedspec.sgfile import read_sg, write_sg
from signedspec.spectral import eigenvalues

from conftest import FIXTURES

SK8_FILE = str(FIXTURES / "sk8.sg")


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv) + ["--json"], stream=buf)
    doc = json.loads(buf.getvalue())
    assert set(doc) == {"command", "status", "data"}
    return code, doc


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {
        "k2": complete_graph(2),
        "k2neg": complete_graph(2, -1),
        "k3": complete_graph(3),
        "k3neg": complete_graph(3, -1),
        "p2": path_graph(2),
        "p3": path_graph(3),
        "tri": unbalanced_triangle(),
        "c4": cycle_graph(4),
    }.items():
        p = tmp_path / f"{name}.sg"
        write_sg(p, g)
        paths[name] = str(p)
    return paths


def test_spectrum_sk8():
    code, doc = call("spectrum", SK8_FILE)
    assert code == 0 and doc["status"] == "ok"
    vals = np.array(doc["data"]["eigenvalues"])
    assert np.allclose(vals, -vals[::-1], atol=1e-10)
    assert doc["data"]["char_poly"] == [425, 0, -620, 0, 222, 0, -28, 0, 1]


def test_charpoly(files):
    code, doc = call("charpoly", files["k3"])
    assert code == 0 and doc["data"]["char_poly"] == [-2, -3, 0, 1]


def test_sign_symmetric_refuted():
    code, doc = call("check", "sign-symmetric", SK8_FILE)
    assert code == 1 and doc["status"] == "refuted"


def test_sign_symmetric_witness(files):
    code, doc = call("check", "sign-symmetric", files["k2"])
    assert code == 0
    assert set(doc["data"]["witness"]) == {"permutation", "switch_set"}


def test_sign_symmetric_clique(tmp_path, files):
    out = tmp_path / "big.sg"
    assert call("rooted-product", SK8_FILE, files["p2"], "--copies", "8", "--root", "0", "--out", str(out))[0] == 0
    code, doc = call("check", "sign-symmetric", str(out))
    assert code == 2 and doc["data"]["reason"] == "search_too_large"
    code, doc = call("check", "sign-symmetric", str(out), "--clique")
    assert code == 1 and doc["data"]["refuted"]


def test_checks(files):
    assert call("check", "sym-spectrum", SK8_FILE)[0] == 0
    assert call("check", "sym-spectrum", files["k3"])[0] == 1
    assert call("check", "switching-iso", files["k2"], files["k2neg"])[0] == 0
    assert call("check", "switching-iso", files["k3"], files["tri"])[0] == 1
    assert call("check", "iso", files["k2"], files["k2neg"])[0] == 1
    assert call("check", "iso", files["k3"], files["k3"])[0] == 0
    assert call("check", "cospectral", files["k2"], files["k2neg"])[0] == 0
    assert call("check", "cospectral", files["k3"], files["k3neg"])[0] == 1


def test_coiso(files):
    assert call("check", "coiso", files["p3"], files["p3"], "--root", "0,2")[0] == 0
    assert call("check", "coiso", files["p3"], files["p3"], "--root", "0,1")[0] == 1
    code, doc = call("check", "coiso", files["p3"])
    assert code == 2 and doc["data"]["reason"] == "bad_arguments"


def test_neps_pipeline(tmp_path, files):
    out = tmp_path / "c.sg"
    code, doc = call("neps", files["k3"], files["tri"], "--basis", "10,01", "--out", str(out))
    assert code == 0
    product = read_sg(out)
    code, doc = call("spectrum", str(out))
    a = eigenvalues(complete_graph(3)).values
    b = eigenvalues(unbalanced_triangle()).values
    sums = sorted(x + y for x in a for y in b)
    assert np.allclose(doc["data"]["eigenvalues"], sums, atol=1e-9)
    assert product.n == 9


def test_neps_basis_file(tmp_path, files):
    basis = tmp_path / "basis.txt"
    basis.write_text("10\n01\n")
    code, doc = call("neps", files["k2"], files["k2"], "--basis", str(basis))
    assert code == 0 and doc["data"]["graph"]["n"] == 4


def test_neps_certify(files):
    assert call("neps-certify", files["k3"], files["k3neg"], "--basis", "10,01")[0] == 0
    code, doc = call("neps-certify", files["k3"], files["k3"], "--basis", "10,01")
    assert code == 1 and not doc["data"]["certified"]


def test_rooted_product_and_certify(tmp_path, files):
    code, doc = call("rooted-product", files["k2"], files["p2"], files["p2"], "--root", "0,0")
    assert code == 0
    assert doc["data"]["char_poly"] == [1, 0, -3, 0, 1]
    assert doc["data"]["formula_matches_direct"]
    assert call("rooted-certify", SK8_FILE, files["p2"], "--root", "0")[0] == 0
    assert call("rooted-certify", files["k3"], files["p2"], "--root", "0")[0] == 1
    code, doc = call("rooted-product", files["k3"], files["p2"])
    assert code == 2 and doc["data"]["reason"] == "bad_arguments"


def test_search_cospectral_rooted(tmp_path):
    code, doc = call("search", "cospectral-rooted", "6", "--out", str(tmp_path / "pairs"))
    assert code == 0 and doc["data"]["count"] >= 1
    index = json.loads((tmp_path / "pairs" / "index.json").read_text())
    assert index["pair_ids"] == list(range(doc["data"]["count"]))
    code, doc = call("search", "cospectral-rooted", "9")
    assert code == 2 and doc["data"]["reason"] == "search_too_large"


def test_search_signatures(files, tmp_path):
    code, doc = call("search", "signatures", files["c4"], "--predicate", "symmetric")
    assert code == 0 and doc["data"]["count"] == 2
    code, doc = call("search", "signatures", files["k3"])
    assert code == 1
    code, doc = call("search", "signatures", SK8_FILE)
    assert code == 2 and doc["data"]["reason"] == "search_too_large"
    code, doc = call("search", "signatures", SK8_FILE, "--samples", "20", "--seed", "3", "--out", str(tmp_path / "hits"))
    assert code in (0, 1)


def test_fixture_round_trip(tmp_path):
    out = tmp_path / "sk8.sg"
    code, doc = call("fixture", "sk8", "--out", str(out))
    assert code == 0
    assert read_sg(out) == sk8()


@pytest.mark.parametrize(
    "argv, reason",
    [
        (["bogus"], "unknown_subcommand"),
        (["spectrum", "/nonexistent/file.sg"], "unreadable_file"),
        (["check", "nonsense", "x"], "unknown_subcommand"),
    ],
)
def test_error_reasons(argv, reason):
    code, doc = call(*argv)
    assert code == 2 and doc["status"] == "error"
    assert doc["data"]["reason"] == reason


def test_malformed_sg(tmp_path):
    p = tmp_path / "bad.sg"
    p.write_text("2 1\n0 1 +2\n")
    code, doc = call("charpoly", str(p))
    assert code == 2 and doc["data"]["reason"] == "malformed_sg"
    assert "line 2" in doc["data"]["message"]


def test_text_output(capsys):
    code = run(["check", "sign-symmetric", SK8_FILE])
    assert code == 1
    assert "not sign-symmetric" in capsys.readouterr().out


def test_output_is_deterministic():
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run(["spectrum", SK8_FILE, "--json"], stream=buf)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "signedspec", "check", "sym-spectrum", SK8_FILE, "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["data"]["symmetric"] is True


def test_negated_graph_spectrum(tmp_path):
    p = tmp_path / "neg.sg"
    write_sg(p, negate(sk8()))
    code, doc = call("spectrum", str(p))
    assert doc["data"]["char_poly"] == [425, 0, -620, 0, 222, 0, -28, 0, 1]
