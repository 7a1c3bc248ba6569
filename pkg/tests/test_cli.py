import json

import pytest

from koszultail.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_betti_fixture_table(capsys):
    code, out, _ = run(capsys, "betti", "--fixture", "example3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "-- betti fixture example3 field=32003 seed=0"
    assert lines[1:] == ["       0 1 2 3", "total: 1 6 8 3", "    0: 1 . . .",
                         "    1: . 4 4 1", "    2: . 2 4 2"]


def test_structured_output_is_one_json_line(capsys):
    code, out, _ = run(capsys, "hilbert", "--fixture", "example1", "--format", "structured")
    assert code == 0 and out.count("\n") == 1
    assert json.loads(out)["h_vector"] == [1, 3, 3, 1]


@pytest.mark.parametrize("argv,code", [
    (["wlp", "--fixture", "example1"], 1),
    (["wlp", "--fixture", "example3"], 0),
    (["wlp", "--fixture", "pair_wlp_ideal"], 0),
    (["wlp", "--fixture", "pair_failwlp_ideal"], 1),
    (["slp", "--fixture", "example1"], 1),
    (["tail", "--fixture", "example1"], 0),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_wlp_structured_reports_failure(capsys):
    code, out, _ = run(capsys, "wlp", "--fixture", "example1", "--format", "structured")
    data = json.loads(out)
    assert code == 1 and data["verdict"] == "fails"
    bad = [m for m in data["maps"] if not m["full_rank"]]
    assert [(m["source_degree"], m["rank"]) for m in bad] == [(1, 2)]


def test_tail_text(capsys):
    _, out, _ = run(capsys, "tail", "--fixture", "example1")
    assert out.rstrip().endswith("Koszul tails: (3,1), maximal")


def test_output_is_reproducible(capsys):
    outs = {run(capsys, "wlp", "--fixture", "example3", "--seed", "5")[1] for _ in range(2)}
    assert len(outs) == 1


def test_construct_then_analyse(capsys, tmp_path):
    path = tmp_path / "pts.json"
    code, out, _ = run(capsys, "construct", "--n", "3", "--d", "2", "--output", str(path))
    assert code == 0 and "= 17" in out
    assert len(json.loads(path.read_text())["points"]) == 17
    code, out, _ = run(capsys, "wlp", "--input", str(path))
    assert code == 1 and "2->3" in out
    code, out, _ = run(capsys, "hilbert", "--input", str(path), "--format", "structured")
    assert sum(json.loads(out)["h_vector"]) == 17


def test_construct_rejects_small_n(capsys, tmp_path):
    code, _, err = run(capsys, "construct", "--n", "2", "--d", "1", "--output", str(tmp_path / "x"))
    assert code == 2 and "at least 3" in err


def test_fixture_roundtrip(capsys, tmp_path):
    for name in ("example3", "pair_failwlp_ideal"):
        path = tmp_path / f"{name}.json"
        assert run(capsys, "fixture", name, "--output", str(path))[0] == 0
        a = run(capsys, "betti", "--fixture", name)[1].splitlines()[1:]
        b = run(capsys, "betti", "--input", str(path))[1].splitlines()[1:]
        assert a == b


def test_unknown_fixture(capsys):
    code, _, err = run(capsys, "fixture", "nope")
    assert code == 2 and "unknown fixture" in err


def test_empty_points_file(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"ambient_dim": 3, "points": []}))
    code, _, err = run(capsys, "betti", "--input", str(path))
    assert code == 2 and "non-empty" in err


def test_parse_error_has_location(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"variables": ["x", "y"], "generators": ["x^2", "y^2 +* x"]}))
    code, _, err = run(capsys, "betti", "--input", str(path))
    assert code == 2 and "generators[1]" in err


def test_non_artinian_ideal(capsys, tmp_path):
    path = tmp_path / "na.json"
    path.write_text(json.dumps({"variables": ["x", "y", "z"], "generators": ["x^2", "y^2"]}))
    code, _, err = run(capsys, "wlp", "--input", str(path))
    assert code == 2 and "not Artinian" in err and "z" in err


def test_field_conflict(capsys, tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"field": 101, "variables": ["x"], "generators": ["x^2"]}))
    code, _, err = run(capsys, "betti", "--input", str(path), "--field", "103")
    assert code == 2 and "101" in err
    assert run(capsys, "betti", "--fixture", "example3", "--field", "100")[0] == 2


def test_input_and_fixture_exclusive(capsys):
    assert run(capsys, "betti")[0] == 2


def test_verify_thm1(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "--n", "3", "--d", "1")
    assert code == 0 and out.rstrip().endswith("verified")


def test_verify_thm2(capsys):
    code, out, _ = run(capsys, "verify", "thm2", "--fixture", "example3")
    assert code == 0 and "not applicable" in out
    code, out, _ = run(capsys, "verify", "thm2", "--fixture", "example1")
    assert code == 0 and "verified" in out


def test_verify_example2(capsys):
    code, out, _ = run(capsys, "verify", "example2")
    assert code == 0 and out.rstrip().endswith("verified")
