import json
import os
import subprocess

CLI = os.environ.get("MGNET_CLI", "mgnet")


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_region_wyner():
    p = run("region", "--model", "wyner", "--D", "6", "--L", "3", "--mu-tx", "9/8", "--mu-rx", "21/8")
    assert p.returncode == 0, p.stderr
    out = json.loads(p.stdout)
    verts = {(v[0]["num"], v[0]["den"], v[1]["num"], v[1]["den"]) for v in out["vertices"]}
    assert verts == {(0, 1, 0, 1), (0, 1, 21, 8), (3, 2, 9, 8), (3, 2, 0, 1)}


def test_region_sectorized():
    p = run("region", "--model", "sectorized", "--D", "4", "--L", "3", "--mu-tx", "3/4", "--mu-rx", "9/4")
    assert p.returncode == 0, p.stderr
    verts = [(v[0]["num"], v[0]["den"], v[1]["num"], v[1]["den"]) for v in json.loads(p.stdout)["vertices"]]
    assert (1, 1, 3, 2) in verts


def test_region_hex_precondition():
    p = run("region", "--model", "hex", "--D", "6", "--L", "3", "--mu-tx", "1", "--mu-rx", "1")
    assert p.returncode == 2
    assert "(D/2-1) mod 3" in p.stderr


def test_loads_hex():
    p = run("loads", "--model", "hex", "--D", "8", "--L", "3", "--scheme", "both-rx", "--tiling", "2x2")
    assert p.returncode == 0, p.stderr
    out = json.loads(p.stdout)
    assert out["exact_match"] is True
    assert out["mu_rx"] == "7/4"


def test_validate_wyner():
    p = run("validate", "--model", "wyner", "--K", "16", "--D", "6", "--scheme", "both-rx")
    assert p.returncode == 0, p.stderr
    rep = json.loads(p.stdout)["report"]
    assert rep["violations"] == []
    assert rep["subnets"] == 2


def test_sweep_rows():
    p = run("sweep", "--model", "wyner", "--L", "3", "--D", "2..10", "--step", "2")
    assert p.returncode == 0, p.stderr
    assert len(json.loads(p.stdout)["rows"]) == 5
    p = run("sweep", "--model", "wyner", "--L", "3", "--D", "2..10", "--step", "2", "--format", "csv")
    assert len(p.stdout.strip().splitlines()) == 6


def test_figure_stable_and_seed_ignored(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run("figure", "fig10", "-o", str(a)).returncode == 0
    env = dict(os.environ, MGNET_SEED="12345")
    assert run("figure", "fig10", "-o", str(b), env=env).returncode == 0
    assert a.read_bytes() == b.read_bytes()
    rows = a.read_text().splitlines()
    assert any(",2,\"mu_tx=0.1 mu_rx=3\"," in r and ",0.133333333333,2.36666666667," in r for r in rows)
    lines = run("figure", "fig5a").stdout.splitlines()
    assert len({line.split(",")[1] for line in lines[1:]}) == 7


def test_usage_errors():
    assert run("figure", "fig9").returncode == 2
    assert run("region", "--model", "wyner").returncode == 2
    assert run("bogus").returncode == 2
