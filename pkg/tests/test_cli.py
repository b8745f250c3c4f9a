import json

import pytest

from palindroma import cli


def run_ok(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    assert code == cli.EXIT_OK, captured.err
    return captured.out.rstrip("\n")


def run_json(capsys, *argv):
    return json.loads(run_ok(capsys, "--json", *argv))


def test_psi_inline_endomap(capsys):
    out = run_ok(capsys, "psi", "a2 a1 a2; a2; a3")
    assert out == "1 2 0; 0 1 0; 0 0 1"


def test_psi_endomap_file(capsys, tmp_path):
    path = tmp_path / "endo.txt"
    path.write_text("# shear\na2 a1 a2\na2\na3\n")
    payload = run_json(capsys, "psi", str(path))
    assert payload == {"matrix": [[1, 2, 0], [0, 1, 0], [0, 0, 1]]}


def test_lift_and_member(capsys):
    out = run_ok(capsys, "lift", "1 2 2; 0 3 4; 0 2 3")
    assert out.splitlines() == ["a3 a2 a1 a2 a3", "a3^2 a2^3 a3^2", "a2 a3^3 a2"]
    payload = run_json(capsys, "member", "1 2 2; 0 3 4; 0 2 3")
    assert payload == {"member": True}
    payload = run_json(capsys, "member", "1 1 0; 0 1 0; 0 0 1")
    assert payload["member"] is False
    assert "odd" in payload["obstruction"]


def test_palindrome_apply_compose(capsys):
    assert run_ok(capsys, "palindrome", "a2 a1 a2") == "palindrome"
    assert run_ok(capsys, "palindrome", "a1 a2") == "not a palindrome"
    assert run_ok(capsys, "apply", "a2 a1 a2; a2; a3", "a1^-1") == "a2^-1 a1^-1 a2^-1"
    out = run_ok(capsys, "compose", "a2 a1 a2; a2; a3", "a1^-1; a2; a3")
    assert out.splitlines()[0] == "a2^-1 a1^-1 a2^-1"


def test_order_and_charpoly(capsys):
    assert run_ok(capsys, "order", "1 0 0; 0 0 -1; 0 1 0") == "Finite(4)"
    assert run_ok(capsys, "order", "1 2 0; 0 1 0; 0 0 1") == "Infinite"
    payload = run_json(capsys, "charpoly", "3 4; 2 3")
    assert payload == {"coeffs": [1, -6, 1], "tau": 6, "delta": 1}


def test_eigen(capsys):
    payload = run_json(capsys, "eigen", "1 0 0; 0 2 1; 0 3 2")
    assert payload["all_unit"] is False
    kinds = {(e["kind"], e.get("value"), e.get("discriminant"))
             for e in payload["eigenvalues"]}
    assert kinds == {("rational", 1, None), ("quadratic", None, 12)}


def test_reducible(capsys):
    payload = run_json(capsys, "reducible", "1 2 2; 0 3 4; 0 2 3")
    assert payload["reducible"] is True
    assert payload["orientation"] == "UpperLeft1x1"
    assert payload["e"] == 1
    assert payload["A2"] == [[3, 4], [2, 3]]
    assert payload["coupling"] == [1, 1]
    payload = run_json(capsys, "reducible", "0 0 1; 1 0 0; 0 1 0")
    assert payload == {"reducible": False, "patterns": []}


def test_sim1_negative_and_positive(capsys):
    payload = run_json(capsys, "sim1", "1 2 2; 0 3 4; 0 2 3")
    assert payload["verdict"] == "NotConjugate"
    assert payload["residue"] == [0, 2]
    assert payload["invariants"]["m"] == 4
    assert payload["invariants"]["A0"] == [[-2, 4], [2, -2]]
    payload = run_json(capsys, "sim1", "1 4 4; 0 3 4; 0 2 3")
    assert payload["verdict"] == "ConjugateWithWitness"
    assert payload["witness"] == [[1, 0, -2], [0, 3, 4], [0, 2, 3]]


def test_sim1_lower_orientation(capsys):
    payload = run_json(capsys, "sim1", "3 4 2; 2 3 2; 0 0 1", "--orientation", "lower")
    assert payload["verdict"] == "NotConjugate"
    assert payload["residue"] == [0, 2]


def test_sim1_irreducible(capsys):
    payload = run_json(capsys, "sim1", "0 0 1; 1 0 0; 0 1 0")
    assert payload["verdict"] == "Inapplicable"


def test_conjsys_and_residual(capsys):
    payload = run_json(capsys, "conjsys", "1 2 2; 0 3 4; 0 2 3",
                       "1 0 0; 0 3 4; 0 2 3", "--bound", "5")
    assert payload["rank"] == 3
    assert payload["unimodular_in_subgroup"] == []
    payload = run_json(capsys, "residual", "1 2 0; 0 1 0; 0 0 1",
                       "1 2 0; 0 1 0; 0 0 1", "1 0 0; 0 1 0; 0 0 1")
    assert payload["zero"] is True


def test_commutant_modes(capsys):
    assert run_ok(capsys, "commutant", "0 0 1; 1 0 0; 0 1 0", "--rank") == "3"
    payload = run_json(capsys, "commutant", "0 0 1; 1 0 0; 0 1 0", "--basis")
    assert len(payload["basis"]) == 3


def test_centralizer_census_and_report(capsys, tmp_path):
    outdir = tmp_path / "rep"
    payload = run_json(capsys, "centralizer", "0 0 1; 1 0 0; 0 1 0",
                       "--census", "--report-dir", str(outdir))
    assert payload["counts"] == {"1": 1, "2": 1, "3": 2, "6": 2}
    assert payload["infinite"] == 0
    assert (outdir / "census.csv").exists()
    assert (outdir / "census.png").exists()
    csv_text = (outdir / "census.csv").read_text()
    assert csv_text.splitlines()[0] == "order,count"


def test_centralizer_plain_listing(capsys):
    payload = run_json(capsys, "centralizer", "0 0 1; 1 0 0; 0 1 0", "--bound", "1")
    assert payload["count"] == 6


def test_family(capsys):
    payload = run_json(capsys, "family", "P3_B", "--params", "1", "--bound", "1")
    assert payload["instances_commute"] is False
    assert payload["shape_covers"] is True
    payload = run_json(capsys, "family", "A12_form", "--bound", "1")
    assert payload["instances_commute"] is True


def test_zclass_witness(capsys):
    payload = run_json(capsys, "zclass", "witness", "--g1", "A12", "--g2", "A21")
    assert payload["kind"] == "ConjugatorFound"
    payload = run_json(capsys, "zclass", "witness", "--g1", "tau12", "--g2", "tau123")
    assert payload["kind"] == "Distinguisher"
    names = {d["invariant"] for d in payload["distinguishers"]}
    assert "order" in names


def test_zclass_p3_with_report(capsys, tmp_path):
    outdir = tmp_path / "audit"
    payload = run_json(capsys, "zclass", "p3", "--n", "1", "--l", "1", "--m", "1",
                       "--report-dir", str(outdir))
    assert payload["commutant_ranks"] == [3, 5]
    assert payload["erratum"]["nonzero"] is True
    assert len(payload["pair_equations"]) == 8
    assert (outdir / "audit.csv").exists()
    assert (outdir / "audit_ranks.png").exists()


def test_zclass_embed(capsys):
    payload = run_json(capsys, "zclass", "embed", "1 2 -2; 0 1 2; 0 0 1",
                       "--dim", "4")
    assert payload["matrix"] == [[1, 2, -2, 0], [0, 1, 2, 0], [0, 0, 1, 0],
                                 [0, 0, 0, 1]]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code = cli.run(["--json", "--out", str(target), "member", "1 0 0; 0 1 0; 0 0 1"])
    assert code == cli.EXIT_OK
    assert json.loads(target.read_text()) == {"member": True}


def test_bad_matrix_exits_2(capsys):
    assert cli.run(["member", "1 x; 2 3"]) == cli.EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_bad_word_exits_2(capsys):
    assert cli.run(["palindrome", "b1"]) == cli.EXIT_INPUT


def test_non_unimodular_order_exits_2(capsys):
    assert cli.run(["order", "2 0; 0 1"]) == cli.EXIT_INPUT


def test_unknown_command_exits_2(capsys):
    assert cli.run(["frobnicate"]) == cli.EXIT_INPUT


def test_bound_env_override(capsys, monkeypatch):
    monkeypatch.setenv("PALINDROMA_BOUND", "1")
    payload = run_json(capsys, "centralizer", "0 0 1; 1 0 0; 0 1 0")
    assert payload["count"] == 6
    monkeypatch.setenv("PALINDROMA_BOUND", "zzz")
    assert cli.run(["centralizer", "0 0 1; 1 0 0; 0 1 0"]) == cli.EXIT_INPUT
