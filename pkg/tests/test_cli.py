import json
import math
import subprocess
import sys

import pytest

from polyaspec import stream_from_csv
from polyaspec.cli import build_spec, main, stream_covering_k

THIN_SPHERE_SPEC = '{"product":[{"interval":{"a":"pi/24","bc":"dirichlet"}},{"sphere2":{}}]}'


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# spec parsing


def test_build_spec_product_meta():
    spec = build_spec(THIN_SPHERE_SPEC)
    meta = spec.meta()
    assert meta.dimension == 3
    assert meta.volume == pytest.approx(math.pi ** 2 / 6)
    assert meta.bc.value == "dirichlet"


def test_build_spec_rejects_malformed():
    from polyaspec import ConfigError

    for bad in ('{"interval":{}}', '{"box":{"sides":[]}}', '{"nope":{}}',
                '{"product":[{"sphere2":{}}]}', '[1,2]'):
        with pytest.raises(ConfigError):
            build_spec(bad)


def test_stream_covering_k():
    spec = build_spec(THIN_SPHERE_SPEC)
    stream, meta = stream_covering_k(spec, 500)
    assert stream.total_count >= 500


# ---------------------------------------------------------------------------
# subcommands


def test_spectrum_csv_and_json(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "spectrum", "--spec", '{"sphere2":{}}',
                           "--cutoff", "10", "--output", "csv", "--no-timestamp")
    assert code == 0
    assert out.splitlines()[0] == "value,multiplicity"
    assert out.splitlines()[1] == "0.0,1"

    code, out, _ = run_cli(capsys, "spectrum", "--spec", '{"sphere2":{}}',
                           "--cutoff", "10", "--no-timestamp")
    data = json.loads(out)
    assert data["entries"] == [[0.0, 1], [2.0, 3], [6.0, 5]]
    assert data["exact"] is True
    assert "generated_at" not in data


def test_spectrum_deterministic_bytes(capsys):
    args = ("spectrum", "--spec", '{"box":{"sides":[1,2],"bc":"neumann"}}',
            "--cutoff", "200", "--output", "csv", "--no-timestamp")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_spectrum_timestamp_appears_by_default(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--spec", '{"sphere2":{}}', "--cutoff", "5")
    assert code == 0
    assert "generated_at" in json.loads(out)


def test_round_trip_csv_preserves_counting(capsys, tmp_path, rng):
    spec = '{"product":[{"interval":{"a":"1.3","bc":"neumann"}},{"sphere2":{}}]}'
    out_path = tmp_path / "spectrum.csv"
    code, _, _ = run_cli(capsys, "spectrum", "--spec", spec, "--cutoff", "400",
                         "--output", "csv", "--out", str(out_path), "--no-timestamp")
    assert code == 0
    stream = build_spec(spec).stream(400.0)
    with open(out_path) as fp:
        back = stream_from_csv(fp, cutoff=400.0)
    for lam in rng.uniform(0.1, 400.0, 1000):
        assert back.count(lam) == stream.count(lam)


def test_count_with_weyl_columns(capsys):
    code, out, _ = run_cli(capsys, "count", "--spec", '{"sphere2":{}}',
                           "--lambda", "6", "--lambda", "43",
                           "--output", "csv", "--no-timestamp", "--weyl")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lambda,count,bound,margin"
    assert lines[1].startswith("6.0,4,")
    assert lines[2].startswith("43.0,49,")


def test_count_triangle_closed_form(capsys):
    code, out, _ = run_cli(capsys, "count", "--spec", '{"triangle":{}}',
                           "--lambda", "1", "--no-timestamp")
    assert code == 0
    assert json.loads(out)["results"][0]["count"] == 1


def test_riesz_values_and_two_term(capsys):
    code, out, _ = run_cli(capsys, "riesz", "--spec", '{"sphere2":{}}',
                           "--gamma", "1", "--lambda", "6", "--no-timestamp")
    assert code == 0
    assert json.loads(out)["results"][0]["riesz"] == pytest.approx(18.0)

    code, out, _ = run_cli(capsys, "riesz", "--spec",
                           '{"box":{"sides":[1,1],"bc":"dirichlet"}}',
                           "--gamma", "1", "--two-term", "--cutoff", "2000",
                           "--no-timestamp")
    assert code == 0
    data = json.loads(out)
    assert data["side"] == "dirichlet"
    assert data["lambda_star"] is not None


def test_constants_json(capsys):
    code, out, _ = run_cli(capsys, "constants", "--d", "3", "--gamma", "1.5",
                           "--no-timestamp")
    assert code == 0
    data = json.loads(out)
    assert data["c_d"] == pytest.approx(1 / (6 * math.pi ** 2))
    assert data["h1"]["value"] > 0 and data["h2"]["value"] > 0
    assert "mu" in data["h1"]


def test_verify_exact_thin_sphere(capsys, tmp_path):
    dump = tmp_path / "margins.csv"
    code, out, _ = run_cli(capsys, "verify", "--spec", THIN_SPHERE_SPEC,
                           "--k-max", "2000", "--exact", "--no-timestamp",
                           "--dump", str(dump))
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "holds"
    assert data["exact"] is True
    assert data["checked"] == 2000
    lines = dump.read_text().splitlines()
    assert lines[0] == "k,margin"
    assert len(lines) == 2001


def test_verify_failure_exit_code(capsys):
    spec = '{"product":[{"interval":{"a":"pi","bc":"dirichlet"}},{"sphere2":{}}]}'
    code, out, _ = run_cli(capsys, "verify", "--spec", spec, "--k-max", "1",
                           "--no-timestamp")
    assert code == 1
    assert json.loads(out)["verdict"] == "fails"


def test_error_json_on_stderr(capsys):
    code, out, err = run_cli(capsys, "verify", "--spec", '{"sphere2":{}}',
                             "--k-max", "10", "--no-timestamp")
    assert code == 2
    assert out == ""
    payload = json.loads(err)
    assert set(payload) == {"error", "message"}
    assert payload["error"] == "ConfigError"


def test_bad_spec_json_is_config_error(capsys):
    code, _, err = run_cli(capsys, "count", "--spec", "{not json", "--lambda", "1")
    assert code == 2
    assert "error" in json.loads(err)


def test_reproduce_sphere_thin(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "sphere-thin", "--no-timestamp")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["integer_constant"] == {"num": 1296, "den": 1}
    assert data["dirichlet_exact"]["checked"] == 100000
    assert data["failure_dirichlet"]["verdict"] == "fails"
    assert data["failure_neumann"]["verdict"] == "fails"


def test_reproduce_square_triangle(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "square-triangle", "--no-timestamp",
                           "--threads", "2")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["threshold_covers_claim"] is True


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "polyaspec.cli", "constants", "--d", "2",
         "--gamma", "1", "--no-timestamp"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["c_d"] == pytest.approx(1 / (4 * math.pi))
