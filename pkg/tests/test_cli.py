import json
import subprocess
import sys

import pytest

from splitfractal import codec
from splitfractal.algebra import family_equals
from splitfractal.carpet import sierpinski_level, split_carpet_level
from splitfractal.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# -- generate --------------------------------------------------------------------------

@pytest.mark.parametrize("construction, level, pieces", [("split-carpet", 2, 64), ("sierpinski", 1, 8)])
def test_generate_counts(construction, level, pieces, capsys):
    code, out, _ = run(["generate", "--construction", construction, "--level", str(level)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["level"] == level and len(doc["pieces"]) == pieces


@pytest.mark.parametrize("level", range(5))
def test_generate_round_trip(level, tmp_path, capsys):
    for construction, make in (("split-carpet", split_carpet_level), ("sierpinski", sierpinski_level)):
        path = tmp_path / f"{construction}-{level}.json"
        assert main(["generate", "--construction", construction, "--level", str(level), "--out", str(path)]) == 0
        parsed = codec.family_from_json(json.loads(path.read_text()))
        assert family_equals(parsed, make(level).cells)


def test_generate_from_a_system(capsys):
    code, out, _ = run(["generate", "--system", "carpet-split", "--level", "2"], capsys)
    assert code == 0
    assert family_equals(codec.family_from_json(json.loads(out)), split_carpet_level(2).cells)


def test_generate_usage_and_caps(tmp_path, capsys, monkeypatch):
    assert run(["generate", "--construction", "split-carpet", "--level", "-1"], capsys)[0] == 64
    assert run(["generate", "--level", "1"], capsys)[0] == 64
    code, _, err = run(["generate", "--construction", "split-carpet", "--level", "7"], capsys)
    assert code == 2 and "cap" in err
    assert run(["--max-pieces", "100", "generate", "--construction", "sierpinski", "--level", "3"], capsys)[0] == 2
    monkeypatch.setenv("SPLITFRACTAL_MAX_PIECES", "10")
    assert run(["generate", "--construction", "split-carpet", "--level", "2"], capsys)[0] == 2
    monkeypatch.setenv("SPLITFRACTAL_MAX_PIECES", "lots")
    assert run(["generate", "--construction", "split-carpet", "--level", "1"], capsys)[0] == 2


def test_io_error(tmp_path, capsys):
    target = tmp_path / "missing-dir" / "out.json"
    assert run(["generate", "--construction", "split-carpet", "--level", "1", "--out", str(target)], capsys)[0] == 3


def test_atomic_write_leaves_no_temp_files(tmp_path, capsys):
    path = tmp_path / "sc.json"
    main(["generate", "--construction", "split-carpet", "--level", "1", "--out", str(path)])
    main(["generate", "--construction", "split-carpet", "--level", "2", "--out", str(path)])
    assert [p.name for p in tmp_path.iterdir()] == ["sc.json"]
    assert len(json.loads(path.read_text())["pieces"]) == 64


# -- iterate ------------------------------------------------------------------------------

def test_iterate_examples(capsys):
    code, out, _ = run(["iterate", "--system", "carpet-split", "--seed", '{"x":"1/2","y":"1/2","t":2}', "--n", "1"], capsys)
    assert code == 0 and len(json.loads(out)["points"]) == 8
    code, out, _ = run(["iterate", "--system", "interval-halving-split", "--seed", '{"x":"1/1","side":0}', "--n", "2"], capsys)
    assert [p["x"] for p in json.loads(out)["points"]] == ["1/4", "1/2", "3/4", "1/1"]


def test_iterate_zero_echoes_canonical_seed(capsys):
    code, out, _ = run(["iterate", "--system", "interval-halving-split", "--seed", '{"side":0,"x":"2/2"}', "--n", "0"], capsys)
    assert code == 0
    assert json.loads(out) == {"space": "split_interval", "points": [{"x": "1/1", "side": 0}]}


def test_iterate_family_seed(capsys):
    seed = '{"space":"split_square","pieces":[{"a":"0","b":"1","c":"0","d":"1"}]}'
    code, out, _ = run(["iterate", "--system", "carpet-split", "--seed", seed, "--n", "2"], capsys)
    assert code == 0
    assert family_equals(codec.family_from_json(json.loads(out)), split_carpet_level(2).cells)


def test_iterate_custom_system(capsys):
    system = '{"maps":[[{"slope":"1/3","offset":"0"}],[{"slope":"1/3","offset":"2/3"}]]}'
    code, out, _ = run(["iterate", "--system", system, "--seed", '{"x":"1/1","side":0}', "--n", "2"], capsys)
    assert code == 0
    assert [p["x"] for p in json.loads(out)["points"]] == ["1/9", "1/3", "7/9", "1/1"]


@pytest.mark.parametrize("seed", ['{"x":"1/1","side":0}', '{"x":"1/2"', '{"x":"0","side":0,"t":9}', '{"x":"3/2","y":"0","t":1}'])
def test_iterate_bad_seeds(seed, capsys):
    assert run(["iterate", "--system", "carpet-split", "--seed", seed, "--n", "1"], capsys)[0] == 2


def test_iterate_point_cap(capsys):
    args = ["--max-points", "100", "iterate", "--system", "carpet-split", "--seed", '{"x":"1/5","y":"1/5","t":1}', "--n", "3"]
    assert run(args, capsys)[0] == 2


# -- member --------------------------------------------------------------------------------

@pytest.mark.parametrize("point, answer", [
    ('{"x":"1/3","y":"1/3","t":2}', "in"),
    ('{"x":"1/3","y":"1/3","t":4}', "out"),
    ('{"x":"1/2","y":"1/2","t":1}', "out"),
])
def test_member(point, answer, capsys):
    code, out, _ = run(["member", point], capsys)
    assert code == 0 and out.strip() == answer


def test_member_bad_point(capsys):
    assert run(["member", '{"x":"1/2","side":0}'], capsys)[0] == 2
    assert run(["member", '{"x":"0","y":"1/2","t":2}'], capsys)[0] == 2


# -- verify ----------------------------------------------------------------------------------

def test_verify_carpet(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, err = run(["verify", "--system", "carpet-split", "--grid-level", "1", "--horizon", "4", "--out", str(path)], capsys)
    assert code == 0 and "certified" in err
    report = json.loads(path.read_text())
    assert report["verdict"] == "certified" and report["n0"] == 1
    assert len(report["first_hits"]) == 8


def test_verify_square(capsys):
    code, out, _ = run(["verify", "--system", "square-quartering-split", "--grid-level", "2", "--horizon", "6",
                        "--seeds", "grid:3"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "certified"


def test_verify_zero_horizon_is_undecided(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(["verify", "--system", "carpet-split", "--grid-level", "1", "--horizon", "0",
                      "--seeds", "grid:2", "--out", str(path)], capsys)
    assert code == 1
    assert json.loads(path.read_text())["verdict"] == "undecided"


def test_verify_explicit_seeds(capsys):
    seeds = '[{"x":"1/2","y":"1/2","t":2},{"x":"0","y":"0","t":4}]'
    code, out, _ = run(["verify", "--system", "carpet-split", "--grid-level", "1", "--horizon", "3", "--seeds", seeds], capsys)
    assert code == 0 and len(json.loads(out)["seeds"]) == 2
    assert run(["verify", "--system", "carpet-split", "--seeds", "grid:0"], capsys)[0] == 2


# -- check-lemma -----------------------------------------------------------------------------

@pytest.mark.parametrize("level, count", [(0, 1), (1, 36)])
def test_check_lemma_small(level, count, capsys):
    code, out, _ = run(["check-lemma", "--level", str(level)], capsys)
    assert code == 0
    assert f"scanned {count} rectangles" in out and "0 counterexamples" in out


# -- render ----------------------------------------------------------------------------------

def test_render_pipeline(tmp_path, capsys):
    fam = tmp_path / "c1.json"
    main(["generate", "--construction", "sierpinski", "--level", "1", "--out", str(fam)])
    code, out, _ = run(["render", str(fam), "--style", "flat", "--size", "300x200"], capsys)
    assert code == 0 and out.count("<rect") == 8 and 'width="300"' in out


def test_render_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"space":"split_square","pieces":[{"a":"1/2"}]}')
    assert run(["render", str(bad)], capsys)[0] == 2
    bad.write_text("not json")
    assert run(["render", str(bad)], capsys)[0] == 2
    assert run(["render", str(tmp_path / "absent.json")], capsys)[0] == 3
    assert run(["render", str(bad), "--size", "0x10"], capsys)[0] == 64
    assert run(["render", str(bad), "--offset", "1/25"], capsys)[0] == 64


def test_render_empty(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text('{"space":"split_square","pieces":[]}')
    code, out, _ = run(["render", str(empty)], capsys)
    assert code == 0 and out.startswith("<?xml") and "<polygon" not in out


# -- the installed command ----------------------------------------------------------------------

def invoke(*args):
    return subprocess.run([sys.executable, "-m", "splitfractal.cli", *args], capture_output=True, text=True)


def test_binary_exit_codes():
    assert invoke("member", '{"x":"1/3","y":"1/3","t":2}').returncode == 0
    assert invoke("frobnicate").returncode == 64
    assert invoke("generate", "--construction", "split-carpet", "--level", "7").returncode == 2
    assert invoke("render", "/nonexistent/family.json").returncode == 3
    assert invoke("verify", "--system", "carpet-split", "--horizon", "0", "--seeds", "grid:1").returncode == 1


def test_binary_is_byte_deterministic():
    runs = [invoke("iterate", "--system", "carpet-split", "--seed", '{"x":"1/5","y":"2/5","t":3}', "--n", "3").stdout
            for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]
