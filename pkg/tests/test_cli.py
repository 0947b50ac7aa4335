import json

import pytest

from sepfacets.cli import main
from sepfacets.graph import serialize_graph, windmill


def test_count_from_edge_list(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("3\n0 1\n1 2\n")
    assert main(["count", "--edges", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_count_from_json(tmp_path, capsys):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    assert main(["count", "--edges", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "6"


def test_count_family(capsys):
    assert main(["count", "--family", "windmill", "7", "3"]) == 0
    assert capsys.readouterr().out.strip() == "216"


def test_count_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("2\n0 0\n")
    assert main(["count", "--edges", str(f)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_formula_commands(capsys):
    assert main(["formula", "windmill", "7", "3"]) == 0
    assert capsys.readouterr().out.strip() == "216"
    assert main(["formula", "max-bicyclic", "7"]) == 0
    assert capsys.readouterr().out.strip() == "180"
    assert main(["formula", "wedge-cycles", "5", "3", "--tail", "1"]) == 0
    assert capsys.readouterr().out.strip() == "360"
    assert main(["formula", "paths", "3", "3", "2"]) == 0
    assert capsys.readouterr().out.strip() == "126"


def test_formula_bad_family(capsys):
    assert main(["formula", "dodecahedron", "1"]) == 1
    assert "unknown family" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["count"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        main(["verify", "everything"])
    assert e.value.code == 1


def test_verify_nn1(capsys):
    assert main(["verify", "nn1", "--n", "6"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["id"] == "nn1" and rep["status"] == "verified"
    assert rep["max"] == "72"


def test_verify_range_emits_one_report_per_n(capsys):
    assert main(["verify", "fbounds", "--n", "8", "--max-n", "10"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [json.loads(l)["params"]["n"] for l in lines] == [8, 9, 10]


def test_verify_jobs_output_matches_sequential(capsys):
    assert main(["verify", "nn1", "--n", "6"]) == 0
    seq = capsys.readouterr().out
    assert main(["verify", "nn1", "--n", "6", "--jobs", "2"]) == 0
    par = capsys.readouterr().out
    a, b = json.loads(seq), json.loads(par)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_verify_guard_exit_code(capsys):
    assert main(["verify", "nn1", "--n", "9", "--no-guard"]) == 3
    assert "guard" in capsys.readouterr().err


def test_verify_missing_n(capsys):
    assert main(["verify", "nn1"]) == 1


def test_counterexample_maps_to_exit_two(monkeypatch, capsys):
    from sepfacets.conjectures import ConjectureReport

    def fake_check(n):
        return ConjectureReport("fbounds", {"n": n}, "counterexample", "9", ["(1, 1, 1)"])

    monkeypatch.setattr("sepfacets.cli.conjectures.check_f_bounds", fake_check)
    assert main(["verify", "fbounds", "--n", "8"]) == 2
    rep = json.loads(capsys.readouterr().out)
    assert rep["status"] == "counterexample" and rep["witnesses"]


def test_verify_identities(capsys):
    assert main(["verify", "identities", "--max-n", "300"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["status"] == "verified"


def test_verify_mixed_cb_bound_only(capsys):
    assert main(["verify", "mixed-cb", "--bound-only", "--max-n", "60"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["params"]["mode"] == "bound-only"


def test_sample_deterministic_bytes(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    base = [
        "sample", "--n", "6", "--edges", "8", "--samples", "5",
        "--burn-in", "10", "--thin", "7", "--seed", "99",
        "--deterministic", "--out",
    ]
    assert main(base + [str(out1)]) == 0
    assert main(base + [str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert out1.read_text().splitlines()[1] == "n,log10_facets,ref_log10"


def test_sample_histogram_jsonl_and_initial(tmp_path):
    start = tmp_path / "wm.txt"
    start.write_text(serialize_graph(windmill(7, 3)))
    out = tmp_path / "s.jsonl"
    rc = main(
        [
            "sample", "--n", "7", "--edges", "9", "--samples", "4",
            "--burn-in", "0", "--thin", "5", "--seed", "1",
            "--initial", str(start), "--format", "jsonl",
            "--deterministic", "--out", str(out),
        ]
    )
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert json.loads(lines[0])["meta"]["n"] == 7
    assert json.loads(lines[1])["count"] == "216"  # starts at the windmill


def test_sample_infeasible_config(tmp_path, capsys):
    rc = main(
        ["sample", "--n", "5", "--edges", "3", "--samples", "2",
         "--seed", "0", "--out", str(tmp_path / "x.csv")]
    )
    assert rc == 1


def test_enumerate_writes_jsonl(tmp_path):
    out = tmp_path / "classes.jsonl"
    assert main(["enumerate", "--n", "5", "--edges", "6", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 5
    for line in lines:
        obj = json.loads(line)
        assert obj["n"] == 5 and len(obj["edges"]) == 6


def test_enumerate_guard(tmp_path, capsys):
    rc = main(["enumerate", "--n", "9", "--edges", "9", "--out", str(tmp_path / "x")])
    assert rc == 3


def test_guard_env_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SEP_FACETS_GUARD", "5")
    assert main(["verify", "nn1", "--n", "6"]) == 3
    monkeypatch.setenv("SEP_FACETS_GUARD", "6")
    assert main(["verify", "nn1", "--n", "6"]) == 0
