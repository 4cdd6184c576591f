"""Command-line dispatch, JSON reports, cache behavior, exit codes."""

import json
import subprocess
import sys

from quadmod.cli import dispatch


def run(argv, capsys):
    code = dispatch(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_gleason_payload(tmp_path, capsys):
    code, rep = run(["--cache-dir", str(tmp_path), "gleason", "3"], capsys)
    assert code == 0
    assert rep["outputs"]["coefficients"] == ["1", "1", "2", "1"]
    assert rep["version"]
    assert all(isinstance(c, str) for c in rep["outputs"]["coefficients"])


def test_orbit_payload(tmp_path, capsys):
    code, rep = run(["--cache-dir", str(tmp_path), "orbit", "2"], capsys)
    assert code == 0
    assert rep["outputs"]["coefficients"] == ["0", "1", "1"]


def test_cache_hit_and_corruption(tmp_path, capsys):
    code, rep = run(["--cache-dir", str(tmp_path), "gleason", "8"], capsys)
    assert code == 0 and rep["timings"]["cache"] == "miss"
    code, rep2 = run(["--cache-dir", str(tmp_path), "gleason", "8"], capsys)
    assert code == 0 and rep2["timings"]["cache"] == "hit"
    assert rep2["outputs"] == rep["outputs"]
    # corrupt the entry: recompute, exit 0, same payload
    victim = next(tmp_path.glob("gleason-n8-*.json"))
    victim.write_text(victim.read_text().replace('"1"', '"9"', 1))
    code, rep3 = run(["--cache-dir", str(tmp_path), "gleason", "8"], capsys)
    assert code == 0
    assert rep3["outputs"] == rep["outputs"]
    assert rep3["timings"]["cache"] in ("corrupt", "miss")
    # and the overwrite healed it
    code, rep4 = run(["--cache-dir", str(tmp_path), "gleason", "8"], capsys)
    assert code == 0 and rep4["timings"]["cache"] == "hit"


def test_cache_version_bump_invalidates(tmp_path, capsys, monkeypatch):
    code, rep = run(["--cache-dir", str(tmp_path), "gleason", "5"], capsys)
    assert code == 0
    import quadmod.cache

    monkeypatch.setattr(quadmod.cache, "__version__", "0.0.0-test")
    code, rep2 = run(["--cache-dir", str(tmp_path), "gleason", "5"], capsys)
    assert code == 0 and rep2["timings"]["cache"] == "miss"


def test_irred_deterministic(tmp_path, capsys):
    code, rep1 = run(["--cache-dir", str(tmp_path), "irred", "4", "--seed", "7"], capsys)
    code2, rep2 = run(["--cache-dir", str(tmp_path), "irred", "4", "--seed", "7"], capsys)
    assert code == code2 == 0
    assert rep1["outputs"] == rep2["outputs"]
    assert rep1["outputs"]["verdict"] == "Irreducible"
    assert all(isinstance(p["p"], str) for p in rep1["outputs"]["patterns"])


def test_pern_and_restrict(tmp_path, capsys):
    code, rep = run(["--cache-dir", str(tmp_path), "pern", "2"], capsys)
    assert code == 0
    assert rep["outputs"]["verification"]["membership_certified"]
    assert rep["outputs"]["pmodel"]["vars"] == ["s1", "s2"]
    code, rep = run(["--cache-dir", str(tmp_path), "restrict", "2"], capsys)
    assert code == 0
    assert rep["outputs"]["match"] is True
    assert rep["outputs"]["multiplicity"] == 1


def test_rpoints_small(tmp_path, capsys):
    code, rep = run(["--cache-dir", str(tmp_path), "rpoints", "2", "--height", "2"], capsys)
    assert code == 0
    pts = rep["outputs"]["points"]
    assert ["0", "0"] in pts and ["1", "-2"] in pts
    assert all(isinstance(x, str) for pt in pts for x in pt)


def test_fstar_report(tmp_path, capsys):
    code, rep = run(["--cache-dir", str(tmp_path), "fstar", "4"], capsys)
    assert code == 0
    out = rep["outputs"]
    assert out["admissible"] is True
    assert out["cross_ratio"] == "-1"
    assert out["smoothness"]["verdict"] == "smooth, interior-adjacent"
    assert out["pullback_a_indices"] == [1]
    assert out["pullback_b_indices"] == [2]


def test_usage_error_exit_code(capsys):
    assert dispatch(["no-such-command"]) == 2
    capsys.readouterr()
    assert dispatch([]) == 2
    capsys.readouterr()


def test_resource_limit_exit_code(tmp_path, capsys):
    code, rep = run(["--cache-dir", str(tmp_path), "pern", "9"], capsys)
    assert code == 3
    assert "error" in rep


def test_subprocess_entry(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "quadmod", "--cache-dir", str(tmp_path), "gleason", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["coefficients"] == ["1", "1"]


def test_suite_quick(tmp_path, capsys):
    code = dispatch(["--cache-dir", str(tmp_path), "suite", "--max-n", "4", "--quick"])
    captured = capsys.readouterr()
    rep = json.loads(captured.out)
    assert code == 0
    assert rep["outputs"]["passed"] is True
    names = [c["name"] for c in rep["outputs"]["criteria"]]
    assert len(names) == 6


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QUADMOD_CACHE_DIR", str(tmp_path / "envcache"))
    code = dispatch(["gleason", "4"])
    capsys.readouterr()
    assert code == 0
    assert list((tmp_path / "envcache").glob("gleason-n4-*.json"))


def test_suite_criteria_deterministic():
    from quadmod import suite

    a = suite.criterion_covers(max_n=12)
    b = suite.criterion_covers(max_n=12)
    assert (a.status, a.details) == (b.status, b.details)
    a = suite.criterion_gleason(max_n=6)
    b = suite.criterion_gleason(max_n=6)
    assert (a.status, a.details) == (b.status, b.details)
