from dataclasses import dataclass, field

import numpy as np

from nlsid.__attr__  import __version__
from nlsid.const     import CONST
from nlsid.exception import ReportError

@dataclass(eq = False)
class LevelResult:
    """
    Everything produced for one excitation RMS level.
    """
    index:      int
    rms:        float
    seed:       int
    record:     object = None
    distortion: object = None
    verdict:    object = None
    frf:        object = None
    fit:        object = None
    indirect:   object = None
    correction: object = None

    def kinds(self):
        present = dict(distortion = self.distortion, frf = self.frf, fit = self.fit, closedloop = self.indirect)
        return [kind for kind in CONST["report_kinds"] if present[kind] is not None]

    def to_dict(self):
        data = dict(index = self.index, rms = self.rms, seed = self.seed)

        if self.distortion is not None:
            report = self.distortion
            data["distortion"] = dict(
                classes      = report.classes.tolist(),
                level_db     = report.level_db,
                noise_db     = report.noise_floor_db,
                aggregates   = report.aggregates()
            )

        if self.verdict is not None:
            data["linearity"] = dict(vars(self.verdict))

        if self.frf is not None:
            frf = self.frf
            data["frf"] = dict(
                method         = frf.method,
                bins           = frf.bins,
                G              = frf.G,
                var_noise      = frf.var_noise,
                var_total      = frf.var_total,
                var_leakage    = frf.var_leakage,
                flagged        = frf.flagged,
                n_realizations = frf.n_realizations,
                n_periods      = frf.n_periods
            )

        if self.fit is not None:
            data["fit"] = dict(self.fit.to_dict(), bins = self.fit.bins, residual_over_sigma = self.fit.residual_over_sigma)

        if self.indirect is not None:
            indirect = self.indirect
            data["closedloop"] = dict(
                bins      = indirect.bins,
                G_bla_r   = indirect.G_bla_r,
                G_direct  = indirect.G_direct,
                bias      = indirect.bias,
                var_bla_r = indirect.var_bla_r,
                var_bias  = indirect.var_bias,
                flagged   = indirect.flagged
            )

            if self.correction is not None:
                correction = self.correction
                data["closedloop"]["correction"] = dict(
                    bins    = correction.bins,
                    Y_corr  = np.mean(correction.Y_corr, axis = 0),
                    flagged = correction.flagged,
                    snr_db  = correction.snr_db
                )

        return data

@dataclass(eq = False)
class ResultBundle:
    """
    Results of a pipeline run. Every payload carries the hash of the configuration it was
    produced from.
    """
    config:  object
    grid:    object
    levels:  list = field(default_factory = list)
    version: str  = __version__

    @property
    def config_hash(self):
        return self.config.hash

    @property
    def seeds(self):
        return dict(seed = self.config.seed, levels = [level.seed for level in self.levels])

    def kinds(self):
        present = set()
        for level in self.levels:
            present.update(level.kinds())
        return [kind for kind in CONST["report_kinds"] if kind in present]

    def require(self, kind):
        if kind not in CONST["report_kinds"]:
            raise ReportError("Unknown report kind '%s'. Available: %s." % (kind, ", ".join(CONST["report_kinds"])))

        if kind not in self.kinds():
            raise ReportError("%s not present. Available: %s." % (kind, ", ".join(self.kinds()) or "none"))

    def to_dict(self):
        return dict(
            bundle_version = CONST["bundle_version"],
            provenance     = dict(config_hash = self.config_hash, version = self.version, seeds = self.seeds),
            config         = self.config.to_dict(),
            grid           = self.grid.to_dict(),
            levels         = [level.to_dict() for level in self.levels]
        )
