import json
import math
import os
import subprocess

import pytest

import ahlfors

CLI = os.environ.get("AHLFORS_CLI")


def test_annulus_second_zero():
    region = ahlfors.preset_region("example1", 0.1)
    grid = ahlfors.build_grid(region, 64)
    est = ahlfors.solve_second_zero(region, grid, ahlfors.solve_boundary(region, grid))
    assert abs(est.a1 - (-0.2)) < 1e-10
    assert est.n == 64
    assert est.mode == "least-squares"


def test_eccentric_circles_benchmark():
    region = ahlfors.preset_region("example2")
    grid = ahlfors.build_grid(region, 64)
    sol = ahlfors.solve_boundary(region, grid)
    est = ahlfors.solve_second_zero(region, grid, sol)
    assert abs(est.a1.real - 0.7125) < 5e-5
    assert abs(est.a1.imag - 1.0342) < 5e-5
    assert ahlfors.residual_at(region, grid, sol, est.a1) < 1e-8
    # the prescribed zero really is a zero
    assert ahlfors.residual_at(region, grid, sol, region.a0) < 1e-10


def test_boundary_values_are_unimodular():
    region = ahlfors.preset_region("example2")
    grid = ahlfors.build_grid(region, 32)
    sol = ahlfors.solve_boundary(region, grid)
    assert len(sol.f) == grid.size() == 64
    assert max(abs(abs(v) - 1.0) for v in sol.f) < 1e-13
    assert abs(sum(sol.theta_prime) * grid.w - 4 * math.pi) < 1e-4


def test_region_json_round_trip():
    region = ahlfors.preset_region("example3a")
    text = ahlfors.region_to_json(region)
    back = ahlfors.region_from_json(text)
    assert ahlfors.region_to_json(back) == text
    parsed = json.loads(text)
    assert set(parsed) == {"outer", "inner", "a0"}


def test_errors_are_typed():
    region = ahlfors.preset_region("example1", 0.1)
    with pytest.raises(ValueError):
        ahlfors.build_grid(region, 7)  # odd n
    region.a0 = 3.0 + 0.0j  # outside the outer circle
    with pytest.raises(ahlfors.GeometryError):
        ahlfors.build_grid(region, 32)
    with pytest.raises(ahlfors.IoError):
        ahlfors.region_from_json("{not json")


def test_zero_mode_three_point():
    region = ahlfors.preset_region("example1", 0.1)
    grid = ahlfors.build_grid(region, 64)
    sol = ahlfors.solve_boundary(region, grid)
    est = ahlfors.solve_second_zero(
        region, grid, sol, ahlfors.ZeroMode.three_point(0.5, 2.0, 4.0)
    )
    assert est.mode == "three-point"
    assert abs(est.a1 - (-0.2)) < 1e-9
    with pytest.raises(ahlfors.SolverError):
        ahlfors.solve_second_zero(
            region, grid, sol, ahlfors.ZeroMode.three_point(1.0, 1.0, 1.0)
        )


def test_sweep_and_csv():
    rows = ahlfors.convergence_sweep(ahlfors.preset_region("example2"), [16, 32])
    assert [r.n for r in rows] == [16, 32]
    assert rows[0].residual_f > rows[1].residual_f
    csv = ahlfors.sweep_csv(rows)
    assert csv.splitlines()[0] == "n,re_a1,im_a1,residual_f,s_defect,ls_residual,error"


needs_cli = pytest.mark.skipif(CLI is None, reason="AHLFORS_CLI not set")


def run_cli(*args, **kw):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kw)


@needs_cli
def test_cli_solve_json_and_determinism():
    args = ("solve", "--preset", "example1", "--a0", "0.5", "--n", "64",
            "--format", "json")
    r1 = run_cli(*args)
    r2 = run_cli(*args)
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout  # byte-identical reruns
    out = json.loads(r1.stdout)
    assert abs(out["a1"][0] + 0.2) < 1e-9
    assert abs(out["a1"][1]) < 1e-9


@needs_cli
def test_cli_exit_codes():
    assert run_cli("solve", "--preset", "example2", "--n", "7").returncode == 2
    assert run_cli("solve", "--no-such-flag").returncode == 2
    # a0 on the outer circle: geometry failure
    assert (
        run_cli("solve", "--preset", "example1", "--a0", "1+0i", "--n", "32").returncode
        == 3
    )
    # coincident collocation points: solver failure
    assert (
        run_cli(
            "solve",
            "--preset",
            "example1",
            "--n",
            "32",
            "--mode",
            "three-point",
            "--t1",
            "1.0",
            "--t2",
            "1.0",
            "--t3",
            "1.0",
        ).returncode
        == 4
    )
    assert run_cli("solve", "--region", "/no/such/file.json").returncode == 5


@needs_cli
def test_cli_table(tmp_path):
    r = run_cli("table", "1")
    assert r.returncode == 0
    assert "-0.2" in r.stdout
    out = tmp_path / "t.csv"
    r = run_cli("sweep", "--preset", "example2", "--n-list", "16,32", "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("n,")
    assert len(lines) == 3
