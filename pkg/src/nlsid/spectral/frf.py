from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__            import __name__ as NAME
from nlsid                     import settings
from nlsid.exception           import EstimationError
from nlsid.spectral.dft        import SpectralSet, period_dfts
from nlsid.spectral.statistics import LineAverages, line_statistics

logger = log.get_logger(name = NAME)

MODES = ("division", "cross_spectral")

@dataclass(eq = False)
class FrfEstimate:
    """
    Nonparametric BLA at the excited bins.

    ``var_noise`` is the FRF variance caused by the disturbing noise, ``var_total`` adds the
    stochastic nonlinear contributions (scatter over realizations) and ``var_leakage`` is the
    transient term, zero in periodic steady state. All are variances of ``G``. Flagged bins
    (input dips) carry NaN.
    """
    grid:           object
    bins:           np.ndarray
    G:              np.ndarray
    var_noise:      np.ndarray = None
    var_total:      np.ndarray = None
    var_leakage:    np.ndarray = None
    n_realizations: int        = 1
    n_periods:      int        = 1
    flagged:        np.ndarray = None
    method:         str        = "division"
    G_realizations: np.ndarray = None
    S_UU:           np.ndarray = None

    def __post_init__(self):
        if self.flagged is None:
            self.flagged = np.zeros(self.bins.size, dtype = bool)

    @property
    def frequencies(self):
        return self.grid.frequencies(self.bins)

    @property
    def valid(self):
        return ~self.flagged

    @property
    def variance(self):
        """
        Best available variance of ``G``: total when realizations allow it, noise otherwise.
        """
        return self.var_total if self.var_total is not None else self.var_noise

    def peak_bin(self):
        magnitude = np.where(self.valid, np.abs(self.G), -np.inf)
        return int(self.bins[np.argmax(magnitude)])

def _dip_mask(S_UU, dip_floor, where):
    floor   = dip_floor * np.median(S_UU)
    flagged = ~(S_UU >= floor) | (S_UU == 0)

    if np.any(flagged):
        logger.warning("%s bins flagged ill-conditioned (input dip) in %s mode: %s"
            % (np.count_nonzero(flagged), where, np.flatnonzero(flagged).tolist()[:10]))

    return flagged

def _division(averages, dip_floor, input, output):
    grid = averages.grid
    bins = grid.excited_bins
    U    = averages.mean[input][:, bins]
    Y    = averages.mean[output][:, bins]
    M, P = U.shape[0], averages.n_averages

    power   = U.real ** 2 + U.imag ** 2
    flagged = _dip_mask(np.mean(power, axis = 0), dip_floor, "division")
    safe    = np.where(flagged, 1.0, U)

    G_m = np.where(flagged, np.nan, Y / safe)
    G   = np.mean(G_m, axis = 0)

    var_noise = None
    if averages.has_noise_estimate:
        var_Y  = averages.var[output][:, bins]
        var_U  = averages.var[input][:, bins]
        covar  = averages.covar[(output, input)][:, bins]

        # first-order variance of Y/U from the sample (co)variances of one period
        var_m  = (var_Y + np.abs(G_m) ** 2 * var_U - 2.0 * np.real(np.conj(G_m) * covar)) / (P * np.where(flagged, 1.0, power))
        var_noise = np.mean(var_m, axis = 0) / M
    else:
        logger.warning("No noise variance: the FRF is based on a single period per realization.")

    var_total = None
    if M >= 2:
        deviation = G_m - G
        var_total = np.sum(np.abs(deviation) ** 2, axis = 0) / (M - 1) / M
    else:
        logger.warning("A single realization: total variance (noise + nonlinear) is not available.")

    return FrfEstimate(grid = grid, bins = bins, G = G, var_noise = var_noise, var_total = var_total,
        var_leakage = np.zeros(bins.size), n_realizations = M, n_periods = P, flagged = flagged,
        method = "division", G_realizations = G_m, S_UU = np.mean(power, axis = 0))

def _cross_spectral(spectra, dip_floor, input, output):
    grid = spectra.grid
    bins = grid.excited_bins
    U    = spectra[input][..., bins].reshape(-1, bins.size)
    Y    = spectra[output][..., bins].reshape(-1, bins.size)
    n    = U.shape[0]

    if n < 2:
        raise EstimationError("Cross-spectral estimation needs at least two blocks.")

    S_UU = np.mean(U.real ** 2 + U.imag ** 2, axis = 0)
    S_YY = np.mean(Y.real ** 2 + Y.imag ** 2, axis = 0)
    S_YU = np.mean(Y * np.conj(U), axis = 0)

    flagged = _dip_mask(S_UU, dip_floor, "cross_spectral")
    S       = np.where(flagged, 1.0, S_UU)

    G        = np.where(flagged, np.nan, S_YU / S)
    residual = np.maximum(S_YY - np.abs(S_YU) ** 2 / S, 0.0) * n / (n - 1)
    variance = np.where(flagged, np.nan, residual / (n * S))

    return FrfEstimate(grid = grid, bins = bins, G = G, var_noise = variance, var_total = variance,
        var_leakage = None, n_realizations = spectra.n_realizations, n_periods = spectra.n_periods,
        flagged = flagged, method = "cross_spectral", S_UU = S_UU)

def estimate_frf(source, mode = "division", dip_floor = None, input = "u", output = "y"):
    """
    FRF at the excited bins.

    ``division``: Y/U of the period-averaged spectra per realization, averaged over
    realizations (``source`` is a LineAverages with per-realization scope, or a SpectralSet).
    ``cross_spectral``: S_YU / S_UU over all blocks of a SpectralSet, for non-periodic
    excitation; the leakage term is then part of the variance.

    Bins whose input power is below ``dip_floor`` times the band median are flagged.
    """
    if mode not in MODES:
        raise EstimationError("Unknown FRF mode '%s'. Available: %s." % (mode, ", ".join(MODES)))

    dip_floor = float(settings.get("dip_floor")) if dip_floor is None else dip_floor

    if mode == "division":
        if isinstance(source, SpectralSet):
            source = line_statistics(source, scope = "per_realization", channels = [input, output])
        if not isinstance(source, LineAverages):
            raise EstimationError("Division mode needs line averages or spectra.")
        return _division(source, dip_floor, input, output)

    if not isinstance(source, SpectralSet):
        raise EstimationError("Cross-spectral mode needs the per-block spectra.")

    return _cross_spectral(source, dip_floor, input, output)

def robust_method(record, dip_floor = None):
    """
    Two-level averaging: over periods (noise variance) and then over realizations (total
    variance). With M = 1 the total variance is absent; with P = 1 only the realization
    scatter is available.
    """
    if record.n_realizations < 2:
        logger.warning("Robust method with M = 1 realization: falling back to the noise variance only.")

    if record.n_periods < 2:
        logger.warning("Robust method with P = 1 period: noise and nonlinear contributions are not separated.")

    averages = line_statistics(period_dfts(record), scope = "per_realization", channels = ["u", "y"])
    estimate = estimate_frf(averages, mode = "division", dip_floor = dip_floor)

    estimate.method = "robust"

    return estimate
