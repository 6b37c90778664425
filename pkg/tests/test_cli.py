import json
import subprocess
import sys

import pytest

from lpmsub import data
from lpmsub.cli import BAD_INPUT, CHECK_FAILED, OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_lpm_uniform(capsys):
    code, out = run_json(capsys, "lpm", "--P", "1,2", "--Q", "3,4")
    assert code == OK
    assert out["num_bases"] == 6 and out["positroid"] is True


def test_lpm_snake(capsys):
    code, out = run_json(capsys, "lpm", "--P", "1,3", "--Q", "3,4")
    assert out["snake"] is True
    assert out["decorated_permutation"]["pi"] == [2, 4, 1, 3]


def test_lpm_text_output(capsys):
    code, out, _ = run(capsys, "lpm", "--P", "1,3", "--Q", "3,4")
    assert code == OK and "snake=True" in out


def test_crossing_paths_exit_two(capsys):
    code, _, err = run(capsys, "lpm", "--P", "3,4", "--Q", "1,2")
    assert code == BAD_INPUT and "error" in err


def test_lpm_from_file(capsys, tmp_path):
    f = write(tmp_path, "l.json", {"n": 4, "P": [1, 3], "Q": [3, 4]})
    code, out = run_json(capsys, "lpm", "--input", f)
    assert out["num_bases"] == 5


def test_subdivide_split(capsys, tmp_path):
    w = {"1,2": 0, "1,3": 1, "1,4": 0, "2,3": 0, "2,4": 0, "3,4": 0}
    f = write(tmp_path, "w.json", {"weights": w})
    code, out = run_json(capsys, "subdivide", "--uniform", "2,4", "--weights", f)
    assert code == OK and len(out["cells"]) == 2


def test_subdivide_reference_vector(capsys):
    vec = ",".join(map(str, data.DELTA36_SNAKE_WEIGHT))
    code, out = run_json(capsys, "subdivide", "--uniform", "3,6", "--vector", vec, "--basis-order", "lex")
    assert len(out["cells"]) == 6
    assert all(c["snake"] for c in out["classification"])
    assert out["dressian"]["tropical"] and out["dressian"]["positive"]


def test_subdivide_zero_weight(capsys):
    code, out = run_json(capsys, "subdivide", "--uniform", "3,6", "--vector", ",".join(["0"] * 20),
                         "--basis-order", "lex")
    assert len(out["cells"]) == 1


def test_subdivide_dot(capsys):
    vec = ",".join(map(str, data.DELTA36_SNAKE_WEIGHT))
    code, out, _ = run(capsys, "subdivide", "--uniform", "3,6", "--vector", vec, "--basis-order", "lex",
                       "--format", "dot")
    assert out.startswith("graph subdivision")


def test_flat_vector_needs_explicit_order(capsys):
    code, _, err = run(capsys, "subdivide", "--uniform", "2,4", "--vector", "0,0,0,0,0,0")
    assert code == BAD_INPUT and "lex" in err


def test_missing_weight_is_named(capsys, tmp_path):
    f = write(tmp_path, "w.json", {"weights": {"1,2": 0, "1,3": 0, "1,4": 0, "2,3": 0, "2,4": 0}})
    code, _, err = run(capsys, "subdivide", "--uniform", "2,4", "--weights", f)
    assert code == BAD_INPUT and "3,4" in err


def test_malformed_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, _ = run(capsys, "subdivide", "--uniform", "2,4", "--weights", str(p))
    assert code == BAD_INPUT


def test_rational_weights_round_trip(capsys, tmp_path):
    w = {"1,2": "1/3", "1,3": "0", "1,4": "0", "2,3": "0", "2,4": "0", "3,4": "1/3"}
    f = write(tmp_path, "w.json", {"weights": w})
    code, out = run_json(capsys, "subdivide", "--uniform", "2,4", "--weights", f)
    for cert in out["certificates"]:
        assert all("." not in v for v in cert["c"])


def test_dressian(capsys, tmp_path):
    w = {"1,2": 0, "1,3": -1, "1,4": 0, "2,3": 0, "2,4": 0, "3,4": 0}
    f = write(tmp_path, "w.json", {"weights": w})
    code, out = run_json(capsys, "dressian", "--uniform", "2,4", "--weights", f)
    assert code == CHECK_FAILED and out["tropical"] is False
    assert out["tropical_witness"]["abcd"] == [1, 2, 3, 4]
    w["1,3"] = 1
    f = write(tmp_path, "w2.json", {"weights": w})
    code, out = run_json(capsys, "dressian", "--uniform", "2,4", "--weights", f)
    assert code == OK and out["tropical"]
    code, out = run_json(capsys, "dressian", "--uniform", "2,4", "--weights", f, "--positive")
    assert code == CHECK_FAILED and not out["positive"]


def test_splits(capsys):
    code, out = run_json(capsys, "splits", "--uniform", "3,6")
    assert out["count"] == 35
    code, out = run_json(capsys, "splits", "--uniform", "2,4", "--lpm-only")
    assert out["count"] == 1 and out["splits"][0]["A"] == [1, 2]


def test_splits_of_disconnected_matroid(capsys, tmp_path):
    f = write(tmp_path, "m.json", {"n": 4, "bases": [[1, 3], [1, 4], [2, 3], [2, 4]]})
    code, _, _ = run(capsys, "splits", "--matroid", f)
    assert code == BAD_INPUT


def test_lpmfan(capsys):
    code, out = run_json(capsys, "lpmfan", "--uniform", "2,4", "--dual-check")
    assert code == OK and out["f_vector"] == [1, 1] and out["dual_check"]
    code, out, _ = run(capsys, "lpmfan", "--uniform", "2,4", "--format", "dot")
    assert out.startswith("digraph lpmfan")


def test_dissect(capsys, tmp_path):
    good = write(tmp_path, "d.json", {"cells": [[[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]],
                                                 [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]]})
    code, out = run_json(capsys, "dissect", "--uniform", "2,4", "--cells", good)
    assert code == OK and out["is_good_dissection"]
    code, out = run_json(capsys, "dissect", "--uniform", "2,4", "--cells", good, "--minor", "1")
    assert code == OK and out["element"] == 1
    bad = write(tmp_path, "o.json", [[[1, 2], [1, 4], [2, 3], [2, 4], [3, 4]],
                                      [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]])
    code, out = run_json(capsys, "dissect", "--uniform", "2,4", "--cells", bad)
    assert code == CHECK_FAILED and "overlap" in out


def test_reproduce_bcfw(capsys):
    code, out = run_json(capsys, "reproduce", "bcfw", "--n", "7", "--k", "1")
    assert code == OK
    assert len(out["cells"]) == 6 and "report" in out
    code, _, _ = run(capsys, "reproduce", "bcfw")
    assert code == BAD_INPUT


def test_reproduce_delta36(capsys):
    code, out = run_json(capsys, "reproduce", "delta36")
    failed = [r["name"] for r in out["results"] if not r["passed"]]
    assert failed == ["LPM split census", "LPM fan f-vector and duality"]
    assert code == CHECK_FAILED


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["subdivide", "--format", "yaml"])
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "splits", "--uniform", "3,6", "--format", "json")
    _, b, _ = run(capsys, "splits", "--uniform", "3,6", "--format", "json")
    assert a == b


def test_console_script_runs():
    res = subprocess.run([sys.executable, "-m", "lpmsub.cli", "lpm", "--P", "1,3", "--Q", "3,4",
                          "--format", "json"], capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["snake"] is True
