import shutil
import subprocess
import sys

import pytest

import plot_figures


def deltanet_cmd():
    exe = shutil.which("deltanet")
    if exe:
        return [exe]
    return [sys.executable, "-m", "deltanet.cli"]


@pytest.fixture(scope="module")
def csvs(tmp_path_factory):
    base = tmp_path_factory.mktemp("csvs")
    paths = {}
    for kind in ("figure4", "figure7"):
        out = base / f"{kind}.csv"
        subprocess.run(deltanet_cmd() + ["compare", kind, "--out", str(out)], check=True)
        paths[kind] = out
    return paths


@pytest.mark.parametrize("kind", ["figure4", "figure7"])
def test_render_both_kinds(csvs, tmp_path, kind):
    out = tmp_path / f"{kind}.png"
    code = plot_figures.main(["--csv", str(csvs[kind]), "--kind", kind, "--out", str(out)])
    assert code == 0
    assert out.exists() and out.stat().st_size > 0


def test_figure4_has_two_curves(csvs):
    fig = plot_figures.build_figure(str(csvs["figure4"]), "figure4")
    assert len(fig.axes[0].lines) == 2
    labels = [line.get_label() for line in fig.axes[0].lines]
    assert labels == ["mycin", "delta1"]


def test_figure7_has_four_curves(csvs):
    fig = plot_figures.build_figure(str(csvs["figure7"]), "figure7")
    assert len(fig.axes[0].lines) == 4
    labels = [line.get_label() for line in fig.axes[0].lines]
    assert labels == ["mycin", "delta1_a05", "delta1_a25", "delta1_a90"]


def test_rerender_is_data_identical(csvs):
    first = plot_figures.build_figure(str(csvs["figure7"]), "figure7")
    second = plot_figures.build_figure(str(csvs["figure7"]), "figure7")
    for a, b in zip(first.axes[0].lines, second.axes[0].lines):
        assert (a.get_xydata() == b.get_xydata()).all()


def test_column_mismatch_rejected(csvs, tmp_path, capsys):
    out = tmp_path / "wrong.png"
    code = plot_figures.main(["--csv", str(csvs["figure7"]), "--kind", "figure4",
                              "--out", str(out)])
    assert code == 1
    assert not out.exists()
    err = capsys.readouterr().err
    assert "missing" in err and "second_update" in err


def test_header_only_csv_rejected(tmp_path, capsys):
    csv_path = tmp_path / "empty.csv"
    csv_path.write_text("second_update,mycin,delta1,abs_diff\n")
    out = tmp_path / "empty.png"
    code = plot_figures.main(["--csv", str(csv_path), "--kind", "figure4",
                              "--out", str(out)])
    assert code == 1
    assert not out.exists()
    assert "no data rows" in capsys.readouterr().err


def test_missing_csv_rejected(tmp_path, capsys):
    code = plot_figures.main(["--csv", str(tmp_path / "nope.csv"), "--kind", "figure4",
                              "--out", str(tmp_path / "x.png")])
    assert code == 1
    assert "error" in capsys.readouterr().err
