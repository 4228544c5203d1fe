from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__    import __name__ as NAME
from nlsid.design.grid import FrequencyGrid
from nlsid.exception   import SynthesisError

logger = log.get_logger(name = NAME)

@dataclass(frozen = True, eq = False)
class MultisineRealization:
    """
    One random-phase multisine period.

    ``amplitudes`` and ``phases`` are indexed by bin 0..N/2. The synthesized signal is
    u(t) = 2/sqrt(N) * sum_k U_k cos(2 pi k t / N + phi_k), so that its unnormalized DFT
    equals sqrt(N) * U_k * exp(j phi_k) at every excited bin.
    """
    grid:       FrequencyGrid
    amplitudes: np.ndarray
    phases:     np.ndarray
    seed:       int
    samples:    np.ndarray
    rms_target: float = None

    @property
    def n_samples(self):
        return self.grid.n_samples

    @property
    def spectrum(self):
        return np.fft.rfft(self.samples)

    @property
    def rms(self):
        return float(np.sqrt(np.mean(self.samples ** 2)))

    def periods(self, n_periods):
        return np.tile(self.samples, n_periods)

def _profile(grid, amplitude_profile):
    amplitudes = np.zeros(grid.n_bins)

    if amplitude_profile is None:
        amplitudes[grid.excited_bins] = 1.0
    elif isinstance(amplitude_profile, dict):
        for k, value in amplitude_profile.items():
            k = int(k)
            if not 0 <= k < grid.n_bins:
                raise SynthesisError("Amplitude profile bin %s lies outside the grid." % k)
            amplitudes[k] = value
    elif callable(amplitude_profile):
        amplitudes[grid.excited_bins] = amplitude_profile(grid.frequencies(grid.excited_bins))
    else:
        profile = np.asarray(amplitude_profile, dtype = float)

        if profile.shape == (grid.n_excited,):
            amplitudes[grid.excited_bins] = profile
        elif profile.shape == (grid.n_bins,):
            amplitudes = profile.copy()
        else:
            raise SynthesisError("Amplitude profile of shape %s matches neither the excited set (%s) nor the grid (%s)."
                % (profile.shape, grid.n_excited, grid.n_bins))

    if np.any(amplitudes < 0) or not np.all(np.isfinite(amplitudes)):
        raise SynthesisError("Amplitudes must be finite and non-negative.")

    outside = np.setdiff1d(np.flatnonzero(amplitudes), grid.excited_bins)
    if outside.size:
        raise SynthesisError("Amplitude profile is nonzero on non-excited bins %s." % outside.tolist()[:10])

    return amplitudes

def _synthesize(grid, amplitudes, phases):
    spectrum = np.sqrt(grid.n_samples) * amplitudes * np.exp(1j * phases)
    return np.fft.irfft(spectrum, n = grid.n_samples)

def synthesize_multisine(grid, amplitude_profile = None, rms_target = 1.0, seed = 0, redistribute = False):
    """
    Draw one random-phase multisine on ``grid``.

    Phases are independent and uniform on [0, 2 pi) from ``numpy.random.default_rng(seed)``.
    With ``rms_target`` set the time samples are scaled to that RMS value (the amplitudes
    are scaled along); ``rms_target = None`` keeps the amplitudes as given.
    """
    if not grid.n_excited:
        raise SynthesisError("Grid has no excited bins.")

    if rms_target is not None and not rms_target > 0:
        raise SynthesisError("rms_target must be positive, got %s." % rms_target)

    amplitudes = _profile(grid, amplitude_profile)

    if redistribute and grid.kind == "odd_sparse":
        amplitudes = amplitudes * np.sqrt(grid.group_size / (grid.group_size - grid.drops_per_group))

    if not np.any(amplitudes):
        raise SynthesisError("Amplitude profile is zero on every excited bin.")

    rng     = np.random.default_rng(seed)
    phases  = np.zeros(grid.n_bins)
    phases[grid.excited_bins] = rng.uniform(0.0, 2.0 * np.pi, size = grid.n_excited)

    samples = _synthesize(grid, amplitudes, phases)

    if rms_target is not None:
        scale      = rms_target / np.sqrt(np.mean(samples ** 2))
        amplitudes = amplitudes * scale
        samples    = _synthesize(grid, amplitudes, phases)

    return MultisineRealization(grid = grid, amplitudes = amplitudes, phases = phases,
        seed = seed, samples = samples, rms_target = rms_target)

def sine_excitation(sample_rate, n_samples, bin, amplitude, phase = 0.0):
    """
    Single-line excitation whose samples equal amplitude * cos(2 pi bin t / N + phase).
    """
    grid = FrequencyGrid(sample_rate = float(sample_rate), n_samples = int(n_samples),
        excited_bins = [bin], kind = "full", f_min = bin * sample_rate / n_samples,
        f_max = bin * sample_rate / n_samples)

    amplitudes = np.zeros(grid.n_bins)
    phases     = np.zeros(grid.n_bins)

    amplitudes[bin] = amplitude * np.sqrt(n_samples) / 2.0
    phases[bin]     = np.mod(phase, 2.0 * np.pi)

    return MultisineRealization(grid = grid, amplitudes = amplitudes, phases = phases,
        seed = None, samples = _synthesize(grid, amplitudes, phases))

def line_amplitudes(realization):
    """
    Two-sided line magnitudes |DFT(k)| / N: an amplitude-a cosine has line value a/2.
    """
    return realization.amplitudes / np.sqrt(realization.n_samples)
