from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__     import __name__ as NAME
from nlsid              import settings
from nlsid.exception    import EstimationError
from nlsid.spectral.dft import SpectralSet, period_dfts

logger = log.get_logger(name = NAME)

@dataclass(eq = False)
class IndirectEstimate:
    """
    Reference-based BLA G_bla_r = S_YR / S_UR at the excited bins, with the per-realization
    stochastic residuals U_tilde_S, Y_tilde_S and Y_S (shape (M, K)). ``G_direct`` is the
    open-loop style S_YU / S_UU and ``bias`` = G_direct - G_bla_r; variances are jackknife
    estimates over realizations.
    """
    grid:           object
    bins:           np.ndarray
    G_ur:           np.ndarray
    G_yr:           np.ndarray
    G_bla_r:        np.ndarray
    U_tilde_S:      np.ndarray
    Y_tilde_S:      np.ndarray
    Y_S:            np.ndarray
    G_direct:       np.ndarray
    bias:           np.ndarray
    spectra:        dict
    flagged:        np.ndarray
    var_bla_r:      np.ndarray = None
    var_bias:       np.ndarray = None
    n_realizations: int        = 1
    n_periods:      int        = 1

    @property
    def frequencies(self):
        return self.grid.frequencies(self.bins)

def _sums(R, U, Y):
    """
    Per-realization sums over periods of the cross and auto products, shape (M, K).
    """
    return dict(
        YR = np.sum(Y * np.conj(R), axis = 1),
        UR = np.sum(U * np.conj(R), axis = 1),
        RR = np.sum(np.abs(R) ** 2, axis = 1),
        YU = np.sum(Y * np.conj(U), axis = 1),
        UU = np.sum(np.abs(U) ** 2, axis = 1)
    )

def _estimates(S):
    bla_r  = S["YR"] / np.where(S["UR"] == 0, 1.0, S["UR"])
    direct = S["YU"] / np.where(S["UU"] == 0, 1.0, S["UU"])
    return bla_r, direct - bla_r

def _jackknife(sums, M):
    totals    = {key: value.sum(axis = 0) for key, value in sums.items()}
    bla_r     = [ ]
    bias      = [ ]

    for m in range(M):
        G, b = _estimates({key: totals[key] - sums[key][m] for key in totals})
        bla_r.append(G)
        bias.append(b)

    bla_r, bias = np.asarray(bla_r), np.asarray(bias)
    scale       = (M - 1) / M

    return (scale * np.sum(np.abs(bla_r - bla_r.mean(axis = 0)) ** 2, axis = 0),
            scale * np.sum(np.abs(bias  - bias.mean(axis = 0))  ** 2, axis = 0))

def indirect_frf(spectra, floor = None, reference = "r", input = "u", output = "y"):
    """
    Cross-spectra against the reference pooled over all periods and realizations give
    G_ur = S_UR / S_RR, G_yr = S_YR / S_RR and G_bla_r = S_YR / S_UR. Bins with |S_UR| below
    ``floor`` times its band median are flagged.
    """
    if not isinstance(spectra, SpectralSet):
        spectra = period_dfts(spectra)

    if reference not in spectra:
        raise EstimationError("The indirect method needs the reference channel '%s'." % reference)

    floor = float(settings.get("dip_floor")) if floor is None else floor
    grid  = spectra.grid
    bins  = grid.excited_bins
    M, P  = spectra.n_realizations, spectra.n_periods

    R, U, Y = (spectra[name][..., bins] for name in (reference, input, output))

    sums  = _sums(R, U, Y)
    S     = {key: value.sum(axis = 0) / (M * P) for key, value in sums.items()}

    magnitude = np.abs(S["UR"])
    flagged   = ~(magnitude >= floor * np.median(magnitude)) | (magnitude == 0) | (S["RR"] == 0)

    if np.any(flagged):
        logger.warning("%s bins flagged: |S_UR| below the conditioning floor." % np.count_nonzero(flagged))

    S_RR    = np.where(flagged, 1.0, S["RR"])
    G_ur    = np.where(flagged, np.nan, S["UR"] / S_RR)
    G_yr    = np.where(flagged, np.nan, S["YR"] / S_RR)
    G_bla_r, bias = _estimates(S)
    G_bla_r = np.where(flagged, np.nan, G_bla_r)
    bias    = np.where(flagged, np.nan, bias)

    R_m, U_m, Y_m = R.mean(axis = 1), U.mean(axis = 1), Y.mean(axis = 1)

    U_tilde_S = U_m - G_ur * R_m
    Y_tilde_S = Y_m - G_yr * R_m
    Y_S       = Y_tilde_S - G_bla_r * U_tilde_S

    var_bla_r, var_bias = None, None

    if M >= 2:
        var_bla_r, var_bias = _jackknife(sums, M)
        var_bla_r = np.where(flagged, np.nan, var_bla_r)
        var_bias  = np.where(flagged, np.nan, var_bias)
    else:
        logger.warning("A single realization: no jackknife variance for the indirect estimate.")

    return IndirectEstimate(
        grid           = grid,
        bins           = bins,
        G_ur           = G_ur,
        G_yr           = G_yr,
        G_bla_r        = G_bla_r,
        U_tilde_S      = U_tilde_S,
        Y_tilde_S      = Y_tilde_S,
        Y_S            = Y_S,
        G_direct       = np.where(flagged, np.nan, G_bla_r + bias),
        bias           = bias,
        spectra        = S,
        flagged        = flagged,
        var_bla_r      = var_bla_r,
        var_bias       = var_bias,
        n_realizations = M,
        n_periods      = P
    )
