from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__            import __name__ as NAME
from nlsid                     import settings
from nlsid.exception           import EstimationError
from nlsid.spectral.distortion import db

logger = log.get_logger(name = NAME)

SAFE, USABLE, UNRELIABLE = "safe", "usable", "unreliable"

def snr_advice(snr_db, warning_db = None, minimum_db = None):
    """
    ``safe`` at or above ``warning_db`` (20 dB), ``usable`` at or above ``minimum_db``
    (10 dB), ``unreliable`` below. Arrays map element-wise.
    """
    warning_db = float(settings.get("snr_warning_db")) if warning_db is None else warning_db
    minimum_db = float(settings.get("snr_minimum_db")) if minimum_db is None else minimum_db

    snr    = np.asarray(snr_db, dtype = float)
    advice = np.where(snr >= warning_db, SAFE, np.where(snr >= minimum_db, USABLE, UNRELIABLE))

    return str(advice) if advice.ndim == 0 else advice

@dataclass(eq = False)
class CorrectionResult:
    """
    First-order feedback correction at the detection bins, per realization group:
    Y_corr = Y - G_interp U. ``neighbors`` holds the excited bins used for each detection
    bin (-1 when missing); ``flagged`` bins are left uncorrected.
    """
    grid:      object
    bins:      np.ndarray
    Y_corr:    np.ndarray
    G_interp:  np.ndarray
    neighbors: np.ndarray
    flagged:   np.ndarray
    snr_db:    np.ndarray = None

    @property
    def advice(self):
        return None if self.snr_db is None else snr_advice(self.snr_db)

    def apply(self, mean_Y):
        """
        Copy of ``mean_Y`` with the corrected values written to the detection bins only.
        """
        Y     = np.array(mean_Y, dtype = complex, copy = True)
        bins  = self.bins[~self.flagged]
        value = self.Y_corr[:, ~self.flagged]

        if Y.ndim == 1:
            value = value.mean(axis = 0)

        Y[..., bins] = value

        return Y

def _neighbors(excited, bins):
    upper = np.searchsorted(excited, bins)
    lower = upper - 1

    has   = (lower >= 0) & (upper < excited.size)
    low   = np.where(lower >= 0, excited[np.clip(lower, 0, excited.size - 1)], -1)
    high  = np.where(upper < excited.size, excited[np.clip(upper, 0, excited.size - 1)], -1)

    return np.stack([low, high], axis = 1), ~has

def _snr(Y, noise, bins):
    return db(np.mean(np.abs(Y[:, bins]) ** 2, axis = 0)) - db(np.mean(noise[:, bins], axis = 0))

def correct_feedback(averages, grid = None, input = "u", output = "y"):
    """
    Interpolate the FRF Y/U of the excited bins linearly (complex values) to every
    detection bin and subtract the predicted linear response there.
    """
    grid = grid or averages.grid
    bins = np.union1d(grid.detection_bins, grid.even_detection_bins).astype(int)

    if not bins.size:
        raise EstimationError("Grid has no detection bins to correct.")

    excited = np.asarray(grid.excited_bins)
    U, Y    = averages.mean[input], averages.mean[output]

    neighbors, flagged = _neighbors(excited, bins)

    if np.any(flagged):
        logger.warning("%s detection bins lack an excited neighbor on both sides and stay uncorrected: %s"
            % (np.count_nonzero(flagged), bins[flagged].tolist()[:10]))

    low, high = np.where(flagged, bins, neighbors[:, 0]), np.where(flagged, bins, neighbors[:, 1])
    width     = np.where(high > low, high - low, 1)
    weight    = (bins - low) / width

    G_low     = Y[:, low]  / np.where(U[:, low]  == 0, 1.0, U[:, low])
    G_high    = Y[:, high] / np.where(U[:, high] == 0, 1.0, U[:, high])

    G_interp  = np.where(flagged, np.nan, G_low + weight * (G_high - G_low))
    Y_corr    = np.where(flagged, Y[:, bins], Y[:, bins] - np.nan_to_num(G_interp) * U[:, bins])

    snr   = None
    noise = averages.var_of_mean(output)

    if noise is not None:
        # reference dominance at the excited neighbors, the weaker side counts
        snr   = np.where(flagged, np.nan, np.minimum(_snr(Y, noise, low), _snr(Y, noise, high)))

        advice = snr_advice(snr[~flagged])
        if np.any(advice == UNRELIABLE):
            logger.warning("%s corrected bins have an SNR below %s dB: the correction is unreliable there."
                % (np.count_nonzero(advice == UNRELIABLE), settings.get("snr_minimum_db")))
        elif np.any(advice == USABLE):
            logger.warning("%s corrected bins have an SNR below %s dB."
                % (np.count_nonzero(advice == USABLE), settings.get("snr_warning_db")))

    return CorrectionResult(grid = grid, bins = bins, Y_corr = Y_corr, G_interp = G_interp,
        neighbors = neighbors, flagged = flagged, snr_db = snr)
