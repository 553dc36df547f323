import os

import pytest

from plotkit.render import PlotSpec, SchemaError, render_scan, render_timeseries, run

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def golden(name):
    return os.path.join(GOLDEN, name)


def assert_nonzero_image(path):
    assert os.path.exists(path)
    assert os.path.getsize(path) > 1000


class TestRenderScan:
    def test_qubit_scan_contour(self, tmp_path):
        out = tmp_path / "qubit.png"
        summary = render_scan(
            PlotSpec(golden("qubit_scan.csv"), "contour", True, str(out))
        )
        assert_nonzero_image(out)
        assert summary["points"] == 441
        assert summary["isocurves"] is True
        assert summary["diverging"] is False  # qubit 2-exposure is nonnegative
        print("\n[ACCEPTANCE] secondary qubit-scan render: PASS")

    def test_qutrit_scan_diverging_map(self, tmp_path):
        out = tmp_path / "qutrit.png"
        summary = render_scan(
            PlotSpec(golden("qutrit_scan.csv"), "contour", True, str(out))
        )
        assert_nonzero_image(out)
        # negative-exposure regions force the zero-centered diverging palette
        assert summary["diverging"] is True
        print("\n[ACCEPTANCE] secondary qutrit-scan render: PASS")

    def test_toy_three_row_csv(self, tmp_path):
        csv_path = tmp_path / "toy.csv"
        csv_path.write_text(
            "delta,alpha2,exposure,renyi,valid\n"
            "0,0,0.1,0.2,true\n0,1,0.3,0.1,true\n1,0,,,false\n"
        )
        out = tmp_path / "toy.png"
        render_scan(PlotSpec(str(csv_path), "contour", False, str(out)))
        assert_nonzero_image(out)

    def test_wrong_schema_raises(self, tmp_path):
        csv_path = tmp_path / "bad.csv"
        csv_path.write_text("a,b,c\n1,2,3\n")
        with pytest.raises(SchemaError):
            render_scan(PlotSpec(str(csv_path), "contour", False, str(tmp_path / "x.png")))


class TestRenderTimeseries:
    def test_udw_series(self, tmp_path):
        out = tmp_path / "udw.png"
        summary = render_timeseries(
            PlotSpec(golden("udw_timeseries.csv"), "timeseries", False, str(out))
        )
        assert_nonzero_image(out)
        assert summary["points"] == 41
        assert summary["series"] >= 2
        print("\n[ACCEPTANCE] secondary UDW time-series render: PASS")

    def test_two_series_legend(self, tmp_path):
        csv_path = tmp_path / "two.csv"
        csv_path.write_text("t,s_a,s_b\n0,0.0,1.0\n0.5,0.2,0.8\n1,0.3,0.7\n")
        summary = render_timeseries(
            PlotSpec(str(csv_path), "timeseries", False, str(tmp_path / "two.png"))
        )
        assert summary["series"] == 2

    def test_empty_rows_rejected(self, tmp_path):
        csv_path = tmp_path / "empty.csv"
        csv_path.write_text("t,h_a\n")
        with pytest.raises(SchemaError):
            render_timeseries(
                PlotSpec(str(csv_path), "timeseries", False, str(tmp_path / "x.png"))
            )


class TestCli:
    def test_contour_exit_zero(self, tmp_path):
        out = tmp_path / "q.png"
        code = run(
            ["--kind", "contour", "--in", golden("qubit_scan.csv"),
             "--out", str(out), "--isocurves"]
        )
        assert code == 0
        assert_nonzero_image(out)

    def test_isocurve_slice(self, tmp_path):
        out = tmp_path / "iso.png"
        code = run(["--kind", "isocurve-slice", "--in", golden("isocurve.csv"), "--out", str(out)])
        assert code == 0
        assert_nonzero_image(out)

    def test_schema_mismatch_exits_nonzero(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("x,y\n1,2\n")
        code = run(["--kind", "contour", "--in", str(bad), "--out", str(tmp_path / "x.png")])
        assert code == 1
        assert "render:" in capsys.readouterr().err
        print("\n[ACCEPTANCE] secondary schema-mismatch exit: PASS")

    def test_missing_file_exits_nonzero(self, tmp_path):
        code = run(
            ["--kind", "timeseries", "--in", str(tmp_path / "nope.csv"),
             "--out", str(tmp_path / "x.png")]
        )
        assert code == 1

    def test_bad_flags_exit_nonzero(self):
        assert run(["--kind", "sculpture"]) == 1

    def test_input_untouched(self, tmp_path):
        src = golden("udw_timeseries.csv")
        before = open(src, "rb").read()
        run(["--kind", "timeseries", "--in", src, "--out", str(tmp_path / "x.png")])
        assert open(src, "rb").read() == before
