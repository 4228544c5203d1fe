# imports - standard imports
import os.path as osp
import csv
import json

# imports - module imports
from nlsid.data.config import ExperimentConfig
from nlsid.data.report import COLUMNS, emit_report, build_reports
from nlsid.data.util   import write_summary
from nlsid.pipelines   import run_pipeline
from nlsid.exception   import ReportError

# imports - test imports
import pytest

# imports - test imports
from testutils import experiment

def _bundle(**overrides):
    return run_pipeline(ExperimentConfig(experiment(**overrides)))

def _rows(path):
    with open(path) as f:
        return list(csv.reader(f))

def test_emit_report(tmpdir):
    bundle = _bundle()
    path   = str(tmpdir)

    assert bundle.kinds() == ["distortion", "frf", "fit"]

    for kind in bundle.kinds():
        outputs = emit_report(bundle, kind, path = path)

        assert osp.exists(outputs["table"])
        assert osp.exists(outputs["plot"])

        rows = _rows(outputs["table"])
        assert tuple(rows[0]) == COLUMNS[kind]
        assert len(rows) > 1

    rows  = _rows(osp.join(path, "frf.csv"))
    level = set(row[0] for row in rows[1:])
    assert level == {"0", "1"}

    with pytest.raises(ReportError):
        emit_report(bundle, "closedloop", path = path)

    with pytest.raises(ReportError):
        emit_report(bundle, "foobar", path = path)

def test_build_reports_closed_loop(tmpdir):
    bundle  = _bundle(plant = {"type": "polynomial", "coefficients": [1.0, 0.0, 0.2]}, excitation = {"rms_levels": [0.5]},
        loop = {"controller": {"numerator": [0.4]}}, analysis = {"frf_mode": "robust"})
    outputs = build_reports(bundle, path = str(tmpdir))

    assert sorted(outputs) == ["closedloop", "distortion", "frf"]
    assert _rows(outputs["closedloop"]["table"])[0] == list(COLUMNS["closedloop"])

def test_bundle(tmpdir):
    bundle = _bundle()
    data   = bundle.to_dict()

    assert data["provenance"]["config_hash"] == bundle.config.hash
    assert data["provenance"]["seeds"]["levels"] == [level.seed for level in bundle.levels]
    assert data["levels"][0]["linearity"]["verdict"] == "linear"
    assert data["levels"][1]["fit"]["covariance_flag"] == "unreliable under nonlinear distortions"

    summary = str(tmpdir.join("summary.md"))
    write_summary(bundle, summary)

    with open(summary) as f:
        content = f.read()

    assert content.startswith("# tiny")
    assert bundle.config.hash in content
    assert "| 1 | 1.0 | linear |" in content
