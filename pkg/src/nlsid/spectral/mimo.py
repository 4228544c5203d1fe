from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__     import __name__ as NAME
from nlsid              import settings
from nlsid.exception    import EstimationError
from nlsid.spectral.dft import period_dfts

logger = log.get_logger(name = NAME)

@dataclass(eq = False)
class MimoFrfEstimate:
    """
    Per excited bin FRF matrix ``G`` of shape (K, n_y, n_u) and the condition number of
    the input matrix it was solved from.
    """
    grid:      object
    bins:      np.ndarray
    G:         np.ndarray
    condition: np.ndarray
    flagged:   np.ndarray

    @property
    def frequencies(self):
        return self.grid.frequencies(self.bins)

    @property
    def n_outputs(self):
        return self.G.shape[1]

    @property
    def n_inputs(self):
        return self.G.shape[2]

def _channels(spectra, prefix):
    names = sorted((name for name in spectra.channels if name.startswith(prefix)), key = lambda x: int(x[len(prefix):] or 0))
    return names

def mimo_frf(records, inputs = None, condition_threshold = None):
    """
    Solve Y = G U per excited bin, with one column of U and Y per experiment (period and
    realization averaged). Bins whose input matrix has a condition number above
    ``condition_threshold`` are flagged and carry NaN.
    """
    condition_threshold = float(settings.get("condition_threshold")) if condition_threshold is None else condition_threshold

    records = list(records)

    if not records:
        raise EstimationError("MIMO estimation needs at least one record.")

    grid = records[0].grid
    bins = grid.excited_bins
    U, Y = [ ], [ ]

    for record in records:
        spectra = period_dfts(record)

        U.append([spectra[name][..., bins].mean(axis = (0, 1)) for name in _channels(spectra, "u")])
        Y.append([spectra[name][..., bins].mean(axis = (0, 1)) for name in _channels(spectra, "y")])

    # (K, n, experiments)
    U = np.transpose(np.asarray(U), (2, 1, 0))
    Y = np.transpose(np.asarray(Y), (2, 1, 0))

    n_u, n_e = U.shape[1], U.shape[2]

    if n_e != n_u:
        raise EstimationError("Need as many experiments as inputs, got %s experiments for %s inputs." % (n_e, n_u))

    if inputs is not None and inputs.n_inputs != n_u:
        raise EstimationError("Records carry %s inputs, the multisine set %s." % (n_u, inputs.n_inputs))

    condition = np.linalg.cond(U)
    flagged   = ~(condition <= condition_threshold)

    if np.any(flagged):
        logger.warning("%s bins flagged ill-conditioned (condition number above %s)."
            % (np.count_nonzero(flagged), condition_threshold))

    G = np.full((bins.size, Y.shape[1], n_u), np.nan, dtype = complex)

    if np.any(~flagged):
        # G U = Y  <=>  U^T G^T = Y^T
        Ut, Yt = np.swapaxes(U[~flagged], 1, 2), np.swapaxes(Y[~flagged], 1, 2)
        G[~flagged] = np.swapaxes(np.linalg.solve(Ut, Yt), 1, 2)

    return MimoFrfEstimate(grid = grid, bins = bins, G = G, condition = condition, flagged = flagged)
