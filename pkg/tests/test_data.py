import logging

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gpsel.bayes import NIMS
from gpsel.data import Dataset, build_config, load_config, load_csv, parse_config_text, \
    read_report_csv, write_csv, write_report
from gpsel.errors import ConfigError, EmptyAfterFiltering, ParseError
from gpsel.report import BenchmarkReport, MethodRow, csv_header, to_markdown


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 20), p=st.integers(1, 5))
def test_csv_round_trip(tmp_path_factory, seed, n, p):
    rng = np.random.default_rng(seed)
    data = Dataset.from_arrays(rng.standard_normal((n, p)) * 10.0**rng.integers(-8, 8),
                               rng.standard_normal(n))
    path = tmp_path_factory.mktemp("csv") / "d.csv"
    write_csv(data, path)
    back = load_csv(path, "y")
    np.testing.assert_array_equal(back.X, data.X)
    np.testing.assert_array_equal(back.y, data.y)
    assert back.names == data.names


def test_missing_cells_drop_rows_in_order(tmp_path, caplog):
    path = tmp_path / "ozone.csv"
    path.write_text("y,a,b,junk\n1,2,3,x\n4,NA,6,x\n7,8,9,\n10,11,?,x\n13,14,15,x\n")
    with caplog.at_level(logging.WARNING):
        data = load_csv(path, "y", ["a", "b"])
    np.testing.assert_array_equal(data.y, [1, 7, 13])
    np.testing.assert_array_equal(data.X[:, 0], [2, 8, 14])
    assert data.dropped_rows == (2, 4)
    assert "dropped 2" in caplog.text


def test_ozone_style_listwise_deletion(tmp_path):
    rng = np.random.default_rng(0)
    rows = ["y," + ",".join(f"v{j}" for j in range(8))]
    incomplete = set(rng.choice(366, 163, replace=False))
    for i in range(366):
        vals = [f"{v:.3f}" for v in rng.standard_normal(9)]
        if i in incomplete:
            vals[int(rng.integers(0, 9))] = "NA"
        rows.append(",".join(vals))
    path = tmp_path / "oz.csv"
    path.write_text("\n".join(rows) + "\n")
    assert load_csv(path, "y").n == 203


def test_parse_errors(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(ParseError):
        load_csv(empty, "y")
    ragged = tmp_path / "ragged.csv"
    ragged.write_text("y,a\n1,2\n3\n")
    with pytest.raises(ParseError) as info:
        load_csv(ragged, "y")
    assert info.value.row == 2
    with pytest.raises(ParseError):
        load_csv(ragged, "nope")
    allmissing = tmp_path / "na.csv"
    allmissing.write_text("y,a\nNA,1\n2,NA\n")
    with pytest.raises(EmptyAfterFiltering):
        load_csv(allmissing, "y")
    with pytest.raises(FileNotFoundError):
        load_csv(tmp_path / "absent.csv", "y")


def test_config_parsing_and_env_override():
    text = "# experiment\nexample = 3\nreps = 10   # short run\nmethods = NIMS, LASSO\nseed = 4\n"
    cfg = build_config(parse_config_text(text), env={})
    assert cfg.example == 3 and cfg.reps == 10 and cfg.seed == 4
    assert cfg.methods[0] == NIMS and cfg.methods[1] == "LASSO" and len(cfg.methods) == 2
    assert build_config(parse_config_text(text), env={"GPSEL_SEED": "99"}).seed == 99


def test_config_reports_every_violation(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("example = 9\nreps = zero\nmethods = NIMS, OVS\ncolour = red\nformat = pdf\n")
    with pytest.raises(ConfigError) as info:
        load_config(path, env={})
    msgs = " | ".join(info.value.violations)
    for needle in ("example", "reps", "OVS", "colour", "format"):
        assert needle in msgs
    with pytest.raises(ConfigError):
        parse_config_text("just words\n")


def _report():
    rows = [MethodRow("NIMS", 1.4567891234, 0.01, 3.75, 0.05, 0.57, 0.07, (1.0, 0.25, 0.0),
                      3.2, 0.1, 0),
            MethodRow("ORACLE", 1.24, 0.02, 3.0, 0.0, 0.0, 0.0, (1.0, 1.0, 0.0), 3.0, 0.0, 0)]
    return BenchmarkReport("t", 3, 100, 42, rows)


def test_report_round_trip_and_layout(tmp_path):
    rep = _report()
    paths = write_report(rep, tmp_path / "ex", "both")
    assert [p.suffix for p in paths] == [".csv", ".md"]
    header = paths[0].read_text().splitlines()[0].split(",")
    assert header[:7] == ["method", "mse", "mse_se", "hits", "hits_se", "fp", "fp_se"]
    assert header[7:10] == ["v1", "v2", "v3"] and header == csv_header(3)
    back = read_report_csv(paths[0])
    assert back.rows == rep.rows
    md = to_markdown(rep)
    assert "1.45679" in md and "NIMS" in md
    assert write_report(rep, tmp_path / "only", "csv")[0].suffix == ".csv"
