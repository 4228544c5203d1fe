import os, os.path as osp
import csv

import numpy as np

from bpyutils import log
from bpyutils.util.system  import makedirs
from bpyutils.util.imports import import_handler

from nlsid.__attr__ import __name__ as NAME
from nlsid.const    import CONST

logger = log.get_logger(name = NAME)

COLUMNS = {
    "distortion": ("level", "rms", "bin", "frequency", "class", "level_db", "noise_floor_db"),
    "frf":        ("level", "rms", "bin", "frequency", "G_re", "G_im", "var_noise", "var_total", "flagged"),
    "fit":        ("level", "rms", "bin", "frequency", "G_re", "G_im", "model_re", "model_im", "residual_over_sigma"),
    "closedloop": ("level", "rms", "bin", "frequency", "G_bla_r_re", "G_bla_r_im", "G_direct_re", "G_direct_im",
                   "bias_re", "bias_im", "var_bla_r", "var_bias", "flagged")
}

def _number(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))

def _column(values, i):
    return None if values is None else values[i]

def _distortion_rows(level):
    report = level.distortion
    level_db, noise_db = report.level_db, report.noise_floor_db

    for k in report.grid.band_bins:
        yield (level.index, level.rms, k, report.grid.frequencies([k])[0], report.classes[k], level_db[k],
            _column(noise_db, k))

def _frf_rows(level):
    frf = level.frf

    for i, k in enumerate(frf.bins):
        yield (level.index, level.rms, k, frf.grid.frequencies([k])[0], frf.G[i].real, frf.G[i].imag,
            _column(frf.var_noise, i), _column(frf.var_total, i), frf.flagged[i])

def _fit_rows(level):
    fit, frf = level.fit, level.frf
    model    = fit.model.response(fit.bins, frf.grid.n_samples)
    measured = dict(zip(frf.bins.tolist(), frf.G))

    for i, k in enumerate(fit.bins):
        G = measured[int(k)]
        yield (level.index, level.rms, k, frf.grid.frequencies([k])[0], G.real, G.imag, model[i].real,
            model[i].imag, fit.residual_over_sigma[i])

def _closedloop_rows(level):
    est = level.indirect

    for i, k in enumerate(est.bins):
        yield (level.index, level.rms, k, est.grid.frequencies([k])[0], est.G_bla_r[i].real, est.G_bla_r[i].imag,
            est.G_direct[i].real, est.G_direct[i].imag, est.bias[i].real, est.bias[i].imag,
            _column(est.var_bla_r, i), _column(est.var_bias, i), est.flagged[i])

ROWS = {
    "distortion": (_distortion_rows,  "distortion"),
    "frf":        (_frf_rows,         "frf"),
    "fit":        (_fit_rows,         "fit"),
    "closedloop": (_closedloop_rows,  "indirect")
}

def write_table(bundle, kind, target_file):
    rows, attribute = ROWS[kind]

    with open(target_file, "w", newline = "") as f:
        writer = csv.writer(f, lineterminator = "\n")
        writer.writerow(COLUMNS[kind])

        for level in bundle.levels:
            if getattr(level, attribute) is None:
                continue

            for row in rows(level):
                writer.writerow([value if isinstance(value, str) else _number(value) for value in row])

    return target_file

def emit_report(bundle, kind, path = None):
    """
    Write ``<kind>.csv`` (one row per bin and level) and ``<kind>.svg`` into ``path``.
    """
    bundle.require(kind)

    target_dir = osp.abspath(path or os.getcwd())
    makedirs(target_dir, exist_ok = True)

    logger.info("Emitting %s report to %s..." % (kind, target_dir))

    table   = write_table(bundle, kind, osp.join(target_dir, "%s.csv" % kind))

    plot_fn = import_handler("nlsid.data.plots.%s.plot" % kind)
    figure  = plot_fn(bundle, target_file = osp.join(target_dir, "%s.svg" % kind))

    return dict(table = table, plot = figure)

def build_reports(bundle, path = None):
    return {kind: emit_report(bundle, kind, path = path) for kind in CONST["report_kinds"] if kind in bundle.kinds()}
