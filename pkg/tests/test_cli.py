"""Command-line behavior: outputs, exit codes, thin-adapter parity."""

import json
import math
import xml.etree.ElementTree as ET

import pytest

import sommerfeld.cli as cli
from sommerfeld import Discrepancy, Verdict, parameter_rows
from sommerfeld.output import row_to_dict


def run(*argv):
    return cli.run(list(argv))


def test_params_text_nine_labeled_lines(capsys):
    assert run("params", "--z", "92") == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 9
    got = {line.split("=")[0].strip(): line.split("=", 1)[1].strip() for line in lines}
    assert got["omega"] == "0.741135"
    assert got["epsilon"] == "0.904882"
    assert got["a/a0"] == "0.0353163"
    assert got["r_min"] == "0.00335921"
    assert got["r_max"] == "0.0672735"
    assert got["delta_theta"] == "2.19461"
    assert got["v/c"] == "0.671356"
    assert got["E/mc^2"] == "0.933042"
    assert got["winding"] == "0.698565 (rounds to 1)"


def test_params_json_equals_direct_serialization(capsys):
    assert run("params", "--z", "118", "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == row_to_dict(parameter_rows([118])[0])


def test_params_quantum_number_flags(capsys):
    assert run("params", "--z", "92", "--nr", "0", "--ntheta", "2", "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["n_r"], payload["n_theta"]) == (0, 2)
    assert payload["epsilon"] == 0.0


def test_params_csv(capsys):
    assert run("params", "--z", "92", "--format", "csv") == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("z,symbol,name,")
    assert lines[1].startswith("92,U,Uranium,false,U^{91+},")


def test_table_default_range_has_46_columns(capsys):
    assert run("table", "--format", "csv") == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 46
    assert lines[1].split(",")[0] == "92"
    assert lines[-1].split(",")[0] == "137"
    # the table range includes z = 132 even though the published tables skip it
    assert any(line.startswith("132,Utb,") for line in lines)


def test_table_text_blocks(capsys):
    assert run("table", "--z-from", "92", "--z-to", "96") == 0
    out = capsys.readouterr().out
    assert "U^{91+}" in out and "Cm^{95+}" in out
    assert len(out.rstrip("\n").splitlines()) == 10


def test_table_inverted_range_is_usage_error(capsys):
    assert run("table", "--z-from", "100", "--z-to", "99") == 1
    assert "exceeds" in capsys.readouterr().err


def test_orbit_row_count(capsys):
    assert run("orbit", "--z", "92", "--revolutions", "3", "--samples", "2048") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "theta,r,x,y"
    assert len(lines) == 1 + 3 * 2048 + 1


def test_render_svg_to_file(tmp_path, capsys):
    out = tmp_path / "orbit.svg"
    assert run("render", "--z", "118", "--samples", "256", "--out", str(out)) == 0
    assert capsys.readouterr().out == ""
    text = out.read_text(encoding="utf-8")
    assert text.startswith("<?xml")
    ET.fromstring(text)


def test_out_file_matches_stdout(tmp_path, capsys):
    assert run("params", "--z", "92") == 0
    streamed = capsys.readouterr().out
    path = tmp_path / "params.txt"
    assert run("params", "--z", "92", "--out", str(path)) == 0
    assert path.read_text(encoding="utf-8") == streamed


def test_output_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for path in (a, b):
        assert run("render", "--z", "126", "--samples", "512", "--out", str(path)) == 0
    assert a.read_bytes() == b.read_bytes()


def test_classify_text(capsys):
    assert run("classify", "--z", "118") == 0
    assert capsys.readouterr().out == "Super-Strong (one loop, double necklace)\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("params", "--z", "0"),
        ("params", "--z", "138"),
        ("orbit", "--z", "141"),
        ("classify", "--z", "138"),
        ("classify", "--z", "50"),
    ],
)
def test_domain_errors_exit_2(argv, capsys):
    assert run(*argv) == 2
    err = capsys.readouterr().err
    assert err.startswith("sommerfeld: error:")


@pytest.mark.parametrize(
    "argv",
    [
        ("params",),                                   # missing --z
        ("params", "--z", "92", "--badflag"),
        ("params", "--z", "ninety"),
        ("params", "--z", "92", "--format", "yaml"),
        ("params", "--z", "92", "--json", "--format", "csv"),
        ("orbit", "--z", "92", "--samples", "8"),      # below the floor of 16
        ("orbit", "--z", "92", "--revolutions", "0"),
        ("params", "--z", "92", "--nr", "-1"),
        ("bogus",),
        (),
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    assert run(*argv) == 1
    assert capsys.readouterr().err != ""


def test_validate_exits_0_and_prints_report(capsys):
    assert run("validate") == 0
    out = capsys.readouterr().out
    assert "new discrepancies: 0" in out
    assert out.count("[KnownErratum]") == 10


def test_validate_exits_3_on_new_discrepancy(monkeypatch, capsys):
    fake = [
        Discrepancy(
            z=92,
            field="omega",
            printed=1.0,
            recomputed=2.0,
            relative_error=0.5,
            verdict=Verdict.NEW_DISCREPANCY,
        )
    ]
    monkeypatch.setattr(cli, "validate_all", lambda: fake)
    assert run("validate") == 3
    assert "[NewDiscrepancy]" in capsys.readouterr().out


def test_winding_matches_eq_text(capsys):
    assert run("params", "--z", "137") == 0
    winding_line = [l for l in capsys.readouterr().out.splitlines() if l.startswith("winding")][0]
    assert "(rounds to 85)" in winding_line
    assert math.isclose(float(winding_line.split("=")[1].split()[0]), 85.26, abs_tol=5e-3)
