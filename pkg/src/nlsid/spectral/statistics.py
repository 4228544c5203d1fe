import itertools
from dataclasses import dataclass, field

import numpy as np

from bpyutils import log

from nlsid.__attr__  import __name__ as NAME
from nlsid.exception import EstimationError

logger = log.get_logger(name = NAME)

SCOPES = ("per_realization", "pooled")

@dataclass(eq = False)
class LineAverages:
    """
    Per-bin sample means and (co)variances over ``n_averages`` spectra.

    Arrays have shape (groups, N/2 + 1): one group per realization for the
    ``per_realization`` scope, a single group for ``pooled``. Variances are those of a
    single spectrum; the variance of a mean is ``var / n_averages``. Without a noise
    estimate (one spectrum per group) ``var`` and ``covar`` are empty.
    """
    mean:       dict
    var:        dict
    covar:      dict
    n_averages: int
    scope:      str
    grid:       object = None
    n_samples:  int    = None
    channels:   list   = field(default_factory = list)

    @property
    def has_noise_estimate(self):
        return self.n_averages >= 2

    @property
    def n_groups(self):
        return next(iter(self.mean.values())).shape[0]

    @property
    def mean_U(self):
        return self.mean["u"]

    @property
    def mean_Y(self):
        return self.mean["y"]

    @property
    def var_U(self):
        return self.var.get("u")

    @property
    def var_Y(self):
        return self.var.get("y")

    @property
    def covar_YU(self):
        return self.covar.get(("y", "u"))

    def var_of_mean(self, name):
        var = self.var.get(name)
        return None if var is None else var / self.n_averages

def line_statistics(spectra, scope = "per_realization", channels = None):
    if scope not in SCOPES:
        raise EstimationError("Unknown scope '%s'. Available: %s." % (scope, ", ".join(SCOPES)))

    channels = list(channels or spectra.channels)
    data     = dict()

    for name in channels:
        x = spectra[name]
        if scope == "pooled":
            x = x.reshape((1, -1) + x.shape[2:])
        data[name] = x

    n      = next(iter(data.values())).shape[1]
    mean   = {name: x.sum(axis = 1) / n for name, x in data.items()}
    var    = dict()
    covar  = dict()

    if n < 2:
        logger.warning("A single spectrum per group: no noise estimate.")
    else:
        dev = {name: x - mean[name][:, None, :] for name, x in data.items()}

        for name, d in dev.items():
            var[name] = np.sum(d.real ** 2 + d.imag ** 2, axis = 1) / (n - 1)

        for a, b in itertools.combinations(channels, 2):
            # output-like channel first: covar[("y", "u")] = E[(Y - mean_Y) conj(U - mean_U)]
            if b > a:
                a, b = b, a
            covar[(a, b)] = np.sum(dev[a] * np.conj(dev[b]), axis = 1) / (n - 1)

    return LineAverages(mean = mean, var = var, covar = covar, n_averages = n, scope = scope,
        grid = spectra.grid, n_samples = spectra.n_samples, channels = channels)
