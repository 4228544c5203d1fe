from dataclasses import dataclass

import numpy as np

from nlsid.design.grid import FrequencyGrid
from nlsid.exception   import RecordFormatError

@dataclass(eq = False)
class SpectralSet:
    """
    Unnormalized DFT of every period: each channel has shape (M, P, N/2 + 1).
    """
    channels:    dict
    grid:        FrequencyGrid
    n_samples:   int

    @property
    def n_realizations(self):
        return next(iter(self.channels.values())).shape[0]

    @property
    def n_periods(self):
        return next(iter(self.channels.values())).shape[1]

    def __getitem__(self, name):
        return self.channels[name]

    def __contains__(self, name):
        return name in self.channels

def segment_periods(signal, n_samples):
    """
    Cut a flat signal into periods of ``n_samples``; partial periods are rejected.
    """
    signal = np.asarray(signal, dtype = float)

    if signal.shape[-1] % n_samples:
        raise RecordFormatError("Signal of %s samples is not an integer number of %s-sample periods."
            % (signal.shape[-1], n_samples))

    return signal.reshape(signal.shape[:-1] + (signal.shape[-1] // n_samples, n_samples))

def period_dfts(record):
    channels = {
        name: np.fft.rfft(segment_periods(data.reshape(record.n_realizations, -1), record.n_samples), axis = -1)
            for name, data in record.channels.items()
    }

    return SpectralSet(channels = channels, grid = record.grid, n_samples = record.n_samples)
