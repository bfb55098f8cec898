"""The command-line surface: flags, reports, files, exit codes."""
from __future__ import annotations

import pytest

from teapot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def as_dict(out: str) -> dict[str, str]:
    pairs = {}
    for line in out.splitlines():
        if "=" in line:
            k, v = line.split("=", 1)
            pairs.setdefault(k, v)
    return pairs


def test_parry_command(capsys):
    code, out, _ = run(capsys, "parry", "--word", "1001")
    assert code == 0
    d = as_dict(out)
    assert d["coefficients"] == "1,0,0,-2,1"
    assert abs(float(d["leading_root"]) - 1.8392867552141612) < 1e-12
    assert sum(ln.startswith("root=") for ln in out.splitlines()) == 4


def test_itinerary_command(capsys):
    code, out, _ = run(capsys, "itinerary", "--lambda", "1.4142135623730951", "--length", "5")
    assert code == 0
    assert as_dict(out)["prefix"] == "10111"

    code, out, _ = run(capsys, "itinerary", "--lambda", "poly:-1,-1,-1,1", "--length", "8")
    d = as_dict(out)
    assert (code, d["prefix"], d["period"]) == (0, "10011001", "1001")
    assert d["ambiguous_indices"] == "3,7"

    code, out, _ = run(
        capsys, "itinerary", "--lambda", "poly:-1,-1,-1,1", "--length", "8", "--right-limit"
    )
    assert as_dict(out)["prefix"] == "10001001"


def test_test_point_command(capsys):
    code, out, _ = run(
        capsys,
        "test-point",
        "--lambda", "1.82",
        "--re", "0.5840341196392905",
        "--im", "0.4820600149798202",
        "--max-depth", "20",
    )
    assert code == 0
    d = as_dict(out)
    assert d["lambda"] == "91/50"
    assert d["verdict"] == "certified_out"
    assert d["method"] == "inside_enumeration"
    assert d["depth"] == "20"
    assert float(d["margin"]) > 0


def test_test_point_conjugate_agreement(capsys):
    _, out_pos, _ = run(capsys, "test-point", "--lambda", "1.8", "--re", "0.7", "--im", "0.4")
    _, out_neg, _ = run(capsys, "test-point", "--lambda", "1.8", "--re", "0.7", "--im", "-0.4")
    assert as_dict(out_pos)["verdict"] == as_dict(out_neg)["verdict"]


def test_render_slice_constructive(tmp_path, capsys):
    out_csv = tmp_path / "slice.csv"
    code, out, _ = run(
        capsys,
        "render-slice",
        "--lambda", "1.9",
        "--mode", "constructive",
        "--max-word-length", "5",
        "--out", str(out_csv),
    )
    assert code == 0
    assert int(as_dict(out)["points"]) > 0
    assert out_csv.read_text().splitlines()[0] == "re,im"


def test_render_slice_certify(tmp_path, capsys):
    out_pgm = tmp_path / "slice.pgm"
    out_png = tmp_path / "slice.png"
    out_csv = tmp_path / "slice.csv"
    code, out, _ = run(
        capsys,
        "render-slice",
        "--lambda", "1.8",
        "--mode", "certify",
        "--resolution", "12",
        "--depth", "6",
        "--out", str(out_pgm),
        "--csv", str(out_csv),
        "--plot", str(out_png),
    )
    assert code == 0
    d = as_dict(out)
    assert int(d["certified_out"]) > 0 and d["errors"] == "0"
    assert out_pgm.read_bytes().startswith(b"P5\n12 12\n255\n")
    assert out_csv.read_text().splitlines()[0] == "re,im,verdict,depth,margin"
    assert len(out_csv.read_text().splitlines()) == 145
    assert out_png.stat().st_size > 500


def test_render_slice_custom_bounds(tmp_path, capsys):
    out_pgm = tmp_path / "window.pgm"
    code, out, _ = run(
        capsys,
        "render-slice",
        "--lambda", "1.9",
        "--mode", "certify",
        "--resolution", "6",
        "--depth", "5",
        "--bounds", "0.1", "0.4", "0.1", "0.4",
        "--out", str(out_pgm),
    )
    assert code == 0
    d = as_dict(out)
    # the window sits inside the half-disk fast path: everything certifies
    assert d["certified_out"] == "36" and d["unit_circle"] == "0"


def test_teapot_command_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    code1, out, _ = run(capsys, "teapot", "--rates", "10", "--degree", "24", "--out", str(a))
    code2, _, _ = run(capsys, "teapot", "--rates", "10", "--degree", "24", "--out", str(b))
    assert code1 == code2 == 0
    assert int(as_dict(out)["points"]) > 0
    assert a.read_bytes() == b.read_bytes()


def test_asymmetry_check(capsys):
    code, out, _ = run(capsys, "asymmetry-check")
    assert code == 0
    statuses = [ln for ln in out.splitlines() if ln.startswith("stage=")]
    assert len(statuses) == 4
    assert all("status=PASS" in ln for ln in statuses)


def test_flag_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["parry"])  # missing --word
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["itinerary", "--lambda", "2.5", "--length", "5"])  # invalid rate
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["parry", "--word", "10a1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["render-slice", "--lambda", "1.8", "--mode", "paint", "--out", "x"])
    assert exc.value.code == 2


def test_computation_errors_exit_1(capsys):
    # a point within tolerance of the unit circle cannot be certified
    code, out, err = run(
        capsys, "test-point", "--lambda", "1.8", "--re", "1.0000000001", "--im", "0.0"
    )
    assert code == 1
    assert "ambiguous_modulus" in err
    code, out, err = run(capsys, "itinerary", "--lambda", "1.5", "--length", "0")
    assert code == 1
