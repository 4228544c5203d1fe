from dataclasses import dataclass

import numpy as np

from nlsid.exception    import EstimationError
from nlsid.spectral.dft import period_dfts

@dataclass(eq = False)
class HosidfCurve:
    """
    k-th order sinusoidal input describing function G_k(f0, a) = Y(k f0) / U_s(f0)^k, one
    point per sine record. Lines follow |DFT| / N, so an amplitude-a cosine has U_s = a/2.
    """
    order:       int
    frequencies: np.ndarray
    amplitudes:  np.ndarray
    G:           np.ndarray

    @property
    def amplitude(self):
        return float(np.mean(self.amplitudes))

def _line(spectra, name, bin, n_samples):
    return spectra[name][..., bin].mean() / n_samples

def hosidf(sine_records, order):
    if int(order) != order or order < 1:
        raise EstimationError("HOSIDF order must be a positive integer, got %s." % order)

    order = int(order)
    freqs, amplitudes, G = [ ], [ ], [ ]

    for record in sine_records:
        grid = record.grid

        if grid.n_excited != 1:
            raise EstimationError("HOSIDF needs single-sine records, got %s excited bins." % grid.n_excited)

        k0       = int(grid.excited_bins[0])
        harmonic = order * k0

        if harmonic >= grid.n_samples // 2:
            raise EstimationError("Harmonic %s of bin %s lies at or beyond Nyquist (N = %s)."
                % (order, k0, grid.n_samples))

        spectra = period_dfts(record)
        U_s     = _line(spectra, "u", k0, grid.n_samples)

        freqs.append(grid.frequencies([k0])[0])
        amplitudes.append(2.0 * abs(U_s))
        G.append(_line(spectra, "y", harmonic, grid.n_samples) / U_s ** order)

    return HosidfCurve(order = order, frequencies = np.asarray(freqs), amplitudes = np.asarray(amplitudes),
        G = np.asarray(G))
