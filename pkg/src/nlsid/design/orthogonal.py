from dataclasses import dataclass

import numpy as np

from nlsid.exception import SynthesisError

@dataclass(frozen = True, eq = False)
class OrthogonalMultisineSet:
    """
    n_u experiments of n_u inputs each. Input i of experiment e carries the base spectrum
    rotated by ``rotations[e, i]``; ``signals[e]`` has shape (n_u, N).
    """
    base:      object
    n_inputs:  int
    rotations: np.ndarray
    signals:   np.ndarray

    @property
    def n_experiments(self):
        return self.n_inputs

    def input_matrix(self, bin):
        """
        Per-bin input matrix U[i, e] across the experiments.
        """
        return self.base.spectrum[bin] * self.rotations.T

    def condition_number(self):
        return float(np.linalg.cond(self.rotations))

def rotation_matrix(n_inputs):
    e, i = np.meshgrid(np.arange(n_inputs), np.arange(n_inputs), indexing = "ij")
    return np.exp(2j * np.pi * e * i / n_inputs)

def orthogonal_multisines(base, n_inputs):
    if n_inputs < 1:
        raise SynthesisError("n_inputs must be at least 1, got %s." % n_inputs)

    rotations = rotation_matrix(n_inputs)
    spectrum  = np.fft.rfft(base.samples)

    # a constant complex rotation of the positive-frequency half keeps the signal real
    rotated   = spectrum[None, None, :] * rotations[:, :, None]
    signals   = np.fft.irfft(rotated, n = base.n_samples, axis = -1)

    if n_inputs == 1:
        signals = base.samples[None, None, :].copy()

    return OrthogonalMultisineSet(base = base, n_inputs = n_inputs, rotations = rotations, signals = signals)
