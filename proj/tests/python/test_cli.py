"""End-to-end tests of the cxbox command-line tool (binary path in CXBOX_BIN)."""

import json
import os
import subprocess

BIN = os.environ.get("CXBOX_BIN", "cxbox")

FIG3_SPEC = {
    "degrees": [[3, 1], [2, 1]],
    "directions": {"d": 2, "columns": [[2, 0], [0, 3]]},
    "grid": {"omega_max": 50.265482457436692, "bins": 512},
    "eps": 1e-8,
}

HAT_SPEC = {
    "degrees": [[1, 0]],
    "directions": {"d": 1, "columns": [[1]]},
}


def run(*args, expect=0):
    result = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert result.returncode == expect, (result.stdout, result.stderr)
    return result


def write_spec(tmp_path, spec, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(spec))
    return str(path)


def test_eval_roundtrip(tmp_path):
    spec = write_spec(tmp_path, FIG3_SPEC)
    points = tmp_path / "points.csv"
    points.write_text("1.0,1.5\n2.0,3.0\n# comment\n0.5,0.25\n")
    out = tmp_path / "values.csv"
    run("eval", "--spec", spec, "--points", str(points), "--out", str(out))
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("# cxbox eval csv v1")
    assert lines[1] == "x0,x1,re,im"
    assert len(lines) == 5
    x0, x1, re, im = (float(v) for v in lines[2].split(","))
    assert (x0, x1) == (1.0, 1.5)
    assert re != 0.0 or im != 0.0


def test_eval_empty_points_ok(tmp_path):
    spec = write_spec(tmp_path, FIG3_SPEC)
    points = tmp_path / "empty.csv"
    points.write_text("")
    out = tmp_path / "values.csv"
    run("eval", "--spec", spec, "--points", str(points), "--out", str(out))
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 2  # header only


def test_eval_kernel_sweep(tmp_path):
    # k_z data for a degree sweep, as used for phase/magnitude plots.
    points = tmp_path / "points.csv"
    points.write_text("".join(f"{0.1 * i}\n" for i in range(1, 30)))
    for gamma_im in (0.0, 1.0, 2.0):
        spec = write_spec(
            tmp_path,
            {"degrees": [[1, gamma_im]], "directions": {"d": 1, "columns": [[1]]}},
            name=f"kz_{gamma_im}.json",
        )
        out = tmp_path / f"kz_{gamma_im}.csv"
        run("eval", "--spec", spec, "--points", str(points), "--fn", "kernel",
            "--out", str(out))
        assert len(out.read_text().strip().splitlines()) == 31


def test_exit_code_on_invalid_spec(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "degrees": [[-2.0, 0]],
        "directions": {"d": 1, "columns": [[1]]},
    }))
    points = tmp_path / "p.csv"
    points.write_text("0.5\n")
    run("eval", "--spec", str(bad), "--points", str(points), expect=2)


def test_exit_code_on_unsupported_regime(tmp_path):
    # Pointwise evaluation is refused for Re(z) in (-1, 0].
    spec = write_spec(tmp_path, {
        "degrees": [[-0.5, 0.3]],
        "directions": {"d": 1, "columns": [[1]]},
    })
    points = tmp_path / "p.csv"
    points.write_text("0.5\n")
    run("eval", "--spec", spec, "--points", str(points), expect=3)


def test_spectrum_and_determinism(tmp_path):
    spec = write_spec(tmp_path, FIG3_SPEC)
    out1 = tmp_path / "s1.csv"
    out2 = tmp_path / "s2.csv"
    run("spectrum", "--spec", spec, "--out", str(out1))
    run("spectrum", "--spec", spec, "--out", str(out2))
    assert out1.read_bytes() == out2.read_bytes()
    header = out1.read_text().splitlines()
    assert header[0] == "# cxbox spectrum csv v1"
    assert header[1] == "w0,w1,re,im"


def test_sample_writes_field(tmp_path):
    spec = write_spec(tmp_path, FIG3_SPEC)
    out = tmp_path / "field.bin"
    run("sample", "--spec", spec, "--out", str(out))
    payload = out.read_bytes()
    header, _, rest = payload.partition(b"\n")
    meta = json.loads(header)
    assert meta["domain"] == "time"
    assert meta["extents"] == [512, 512]
    assert len(rest) == 512 * 512 * 16


def test_mask_and_verify_roundtrip(tmp_path):
    spec = write_spec(tmp_path, HAT_SPEC)
    mask_path = tmp_path / "mask.json"
    run("mask", "--spec", spec, "--eps", "1e-10", "--out", str(mask_path))
    mask = json.loads(mask_path.read_text())
    entries = {tuple(e["k"]): complex(e["re"], e["im"]) for e in mask["entries"]}
    assert abs(entries[(0,)] - 0.5) < 1e-13
    assert abs(entries[(1,)] - 1.0) < 1e-13
    assert abs(entries[(2,)] - 0.5) < 1e-13

    report_path = tmp_path / "verify.json"
    run("verify", "--spec", spec, "--suite", "twoscale", "--eps", "1e-10",
        "--seed", "42", "--out", str(report_path))
    in_process = json.loads(report_path.read_text())

    report_path2 = tmp_path / "verify2.json"
    run("verify", "--spec", spec, "--suite", "twoscale", "--eps", "1e-10",
        "--seed", "42", "--mask", str(mask_path), "--out", str(report_path2))
    reloaded = json.loads(report_path2.read_text())

    def residual(report):
        return next(c["residual"] for c in report["checks"]
                    if c["name"] == "two_scale_residual")

    assert abs(residual(in_process) - residual(reloaded)) < 1e-12
    assert in_process["pass"] and reloaded["pass"]


def test_verify_all_passes(tmp_path):
    spec = write_spec(tmp_path, {
        "degrees": [[1, 0], [1, 0]],
        "directions": {"d": 2, "columns": [[1, 0], [0, 1]]},
    })
    out = tmp_path / "report.json"
    run("verify", "--spec", spec, "--suite", "all", "--out", str(out))
    report = json.loads(out.read_text())
    assert report["pass"]
    names = {c["name"] for c in report["checks"]}
    assert "boxspline_symbol_semigroup" in names
    assert "two_scale_residual" in names
    assert "spline_equation" in names


def test_decay_report(tmp_path):
    spec = write_spec(tmp_path, {
        "degrees": [[1, 0], [3, 0]],
        "directions": {"d": 2, "columns": [[1, 0], [0, 1]]},
    })
    out = tmp_path / "decay.json"
    run("decay", "--spec", spec, "--out", str(out))
    report = json.loads(out.read_text())
    assert report["alpha_theory"] == 1.0
    assert abs(report["alpha_est"] - 1.0) <= 0.15
    assert len(report["rays"]) >= 2
