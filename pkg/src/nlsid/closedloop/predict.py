from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__  import __name__ as NAME
from nlsid.exception import EstimationError

logger = log.get_logger(name = NAME)

@dataclass(eq = False)
class LoopPrediction:
    """
    FRF an open-loop estimator converges to inside a loop excited by the reference (power
    S_RR) and the output disturbance (power S_VV). ``undefined`` marks bins where neither
    source drives the loop.
    """
    G:         np.ndarray
    C:         np.ndarray
    S_RR:      np.ndarray
    S_VV:      np.ndarray
    G_tilde:   np.ndarray
    undefined: np.ndarray

def predict_closed_loop_frf(G, C, S_RR, S_VV):
    """
    G_tilde = (G S_RR - conj(C) S_VV) / (S_RR + |C|^2 S_VV), reducing to G without
    disturbance and to -1/C without reference.
    """
    G, C, S_RR, S_VV = np.broadcast_arrays(np.asarray(G, dtype = complex), np.asarray(C, dtype = complex),
        np.asarray(S_RR, dtype = float), np.asarray(S_VV, dtype = float))

    if np.any(S_RR < 0) or np.any(S_VV < 0):
        raise EstimationError("Power spectra must be non-negative.")

    denominator = S_RR + np.abs(C) ** 2 * S_VV
    undefined   = denominator == 0

    if np.any(undefined):
        logger.warning("%s bins undefined: neither reference nor disturbance excites the loop."
            % np.count_nonzero(undefined))

    G_tilde = np.where(undefined, np.nan,
        (G * S_RR - np.conj(C) * S_VV) / np.where(undefined, 1.0, denominator))

    return LoopPrediction(G = G, C = C, S_RR = S_RR, S_VV = S_VV, G_tilde = G_tilde, undefined = undefined)
