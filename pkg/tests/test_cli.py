import json

from arrinv.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def run_json(capsys, *argv):
    rc, out = run(capsys, *argv)
    assert rc == 0, out
    return json.loads(out)


def test_report_envelope(capsys):
    doc = run_json(capsys, "betti", "--builtin", "x3")
    assert set(doc) == {
        "arrangement",
        "hypotheses",
        "result",
        "tool_version",
        "verification",
    }
    assert doc["result"] == {"b1": 6, "b2": 12}
    assert len(doc["arrangement"]["normals"]) == 6
    assert doc["verification"] == {"modular_only": False}


def test_decomp_golden(capsys):
    doc = run_json(capsys, "decomp", "--builtin", "braid:3")
    assert doc["result"] == {
        "rational": False,
        "integral": False,
        "h3_rank": 10,
        "local_rank": 8,
        "torsion": [],
    }


def test_info_and_l2(capsys):
    doc = run_json(capsys, "info", "--builtin", "split_solvable:2,3")
    assert doc["result"]["n"] == 6
    assert doc["result"]["rank"] == 3
    assert doc["result"]["flat_counts_by_mobius"] == {"1": 6, "2": 1, "3": 1}
    doc = run_json(capsys, "l2", "--builtin", "braid:3")
    assert len(doc["result"]["flats"]) == 7


def test_holonomy_and_lcs_routes_agree(capsys):
    hol = run_json(capsys, "holonomy", "--builtin", "x3", "--max", "4")
    lcs = run_json(capsys, "lcs", "--builtin", "x3", "--max", "4")
    assert hol["result"]["route"] == "presentation"
    assert lcs["result"]["route"] == "product-formula"
    assert hol["result"]["ranks"] == lcs["result"]["ranks"]
    assert lcs["hypotheses"] == {"q_decomposable": True}


def test_chen_values(capsys):
    doc = run_json(capsys, "chen", "--builtin", "x3", "--max", "4")
    assert doc["result"]["ranks"] == {"1": 6, "2": 3, "3": 6, "4": 9}


def test_resonance_and_charvar(capsys):
    doc = run_json(capsys, "resonance", "--builtin", "nonpappus")
    assert len(doc["result"]["components"]) == 9
    doc = run_json(
        capsys, "charvar", "--builtin", "nonpappus", "--assert-separated"
    )
    assert len(doc["result"]["components"]) == 9
    assert doc["hypotheses"]["separated"] == "asserted"


def test_milnor(capsys):
    doc = run_json(
        capsys, "milnor", "--builtin", "nonpappus", "--assert-separated"
    )
    assert doc["result"]["b1"] == 8
    assert doc["result"]["trivial_monodromy"] is True
    doc = run_json(
        capsys,
        "milnor",
        "--builtin",
        "split_solvable:2,2",
        "--mult",
        "1,2,2,1,2",
        "--assert-separated",
    )
    assert doc["result"]["b1"] == 5
    assert doc["result"]["eigen_multiplicities"]["4"] == 1


def test_exit_code_refusal(capsys):
    rc, _ = run(capsys, "milnor", "--builtin", "nonpappus")
    assert rc == 2
    rc, _ = run(capsys, "lcs", "--builtin", "braid:3")
    assert rc == 2
    rc, _ = run(capsys, "charvar", "--builtin", "pappus")
    assert rc == 2


def test_exit_code_usage(capsys):
    rc, _ = run(capsys, "betti", "--builtin", "no_such_entry")
    assert rc == 1
    rc, _ = run(capsys, "betti", "--builtin", "braid:2")
    assert rc == 1
    rc, _ = run(capsys, "no_such_command")
    assert rc == 1
    rc, _ = run(capsys, "betti")
    assert rc == 1  # no input source
    rc, _ = run(capsys, "milnor", "--builtin", "x3", "--mult", "2,2,2,2,2,2")
    assert rc == 1
    rc, _ = run(capsys, "milnor", "--builtin", "x3", "--mult", "1,1")
    assert rc == 1


def test_exit_code_resource(capsys):
    rc, _ = run(
        capsys,
        "holonomy",
        "--builtin",
        "braid:4",
        "--max",
        "9",
        "--ceiling",
        "1000",
    )
    assert rc == 3


def test_file_inputs(tmp_path, capsys):
    poly = tmp_path / "pencil.txt"
    poly.write_text("[x, y] x y (x+y)\n")
    doc = run_json(capsys, "betti", "--file", str(poly))
    assert doc["result"] == {"b1": 3, "b2": 2}
    blob = tmp_path / "pencil.json"
    blob.write_text(json.dumps({"normals": [[1, 0], [0, 1], [1, 1]]}))
    doc = run_json(capsys, "betti", "--file", str(blob))
    assert doc["result"] == {"b1": 3, "b2": 2}
    bad = tmp_path / "bad.txt"
    bad.write_text("x (x + 1)\n")
    rc, _ = run(capsys, "betti", "--file", str(bad))
    assert rc == 1


def test_input_sources_are_exclusive(tmp_path, capsys):
    poly = tmp_path / "a.txt"
    poly.write_text("x y\n")
    rc, _ = run(capsys, "betti", "--builtin", "x3", "--file", str(poly))
    assert rc == 1


def test_table_output(capsys):
    rc, out = run(capsys, "betti", "--builtin", "x3", "--table")
    assert rc == 0
    assert "b1" in out and "6" in out
    assert not out.lstrip().startswith("{")


def test_modular_flag_surfaces_in_report(capsys):
    doc = run_json(capsys, "holonomy", "--builtin", "nonpappus", "--max", "4")
    assert doc["verification"]["modular_only"] is True
    doc = run_json(capsys, "holonomy", "--builtin", "x3", "--max", "3")
    assert doc["verification"]["modular_only"] is False


def test_check_subcommand(capsys):
    rc, out = run(capsys, "check", "--seed", "3", "--samples", "2")
    assert rc == 0
    doc = json.loads(out)
    checks = doc["result"]["checks"]
    assert checks
    assert all(c["ok"] for c in checks)
    names = {c["name"] for c in checks}
    assert "falk-vs-holonomy" in names
    assert "milnor-double-count" in names


def test_version(capsys):
    rc, out = run(capsys, "--version")
    assert rc == 0
    assert "0.1.0" in out
