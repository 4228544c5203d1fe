import dataclasses
from dataclasses import dataclass

import numpy as np
from scipy import signal

from bpyutils import log

from nlsid.__attr__  import __name__ as NAME
from nlsid           import settings
from nlsid.const     import CONST
from nlsid.exception import ConfigError, DivergenceError

logger = log.get_logger(name = NAME)

@dataclass(frozen = True)
class DuffingParams:
    """
    Forced Duffing oscillator m y'' + c y' + k1 y + k3 y^3 = u, hardening for k3 > 0.
    """
    mass:              float
    damping:           float
    k_linear:          float
    k_cubic:           float = 0.0
    oversample_factor: int   = None
    divergence_bound:  float = None

    def __post_init__(self):
        # unset solver options follow the user settings
        for name, cast in (("oversample_factor", int), ("divergence_bound", float)):
            value = getattr(self, name)
            object.__setattr__(self, name, cast(settings.get(name) if value is None else value))

        if not (self.mass > 0 and self.damping > 0 and self.k_linear > 0):
            raise ConfigError("Duffing mass, damping and k_linear must be positive.")

        if self.oversample_factor < 4:
            raise ConfigError("oversample_factor must be at least 4, got %s." % self.oversample_factor)

    @property
    def natural_frequency(self):
        return np.sqrt(self.k_linear / self.mass) / (2.0 * np.pi)

    @property
    def damping_ratio(self):
        return self.damping / (2.0 * np.sqrt(self.k_linear * self.mass))

    def linear_response(self, frequencies):
        s = 2j * np.pi * np.asarray(frequencies, dtype = float)
        return 1.0 / (self.mass * s ** 2 + self.damping * s + self.k_linear)

    def replace(self, **kwargs):
        return dataclasses.replace(self, **kwargs)

    def stepper(self, sample_rate, batch = ()):
        return _DuffingStepper(self, sample_rate, batch)

    @classmethod
    def from_resonance(cls, natural_frequency = None, damping_ratio = None, k_linear = None,
        k_cubic = None, **kwargs):
        defaults = CONST["duffing"]

        natural_frequency = defaults["natural_frequency"] if natural_frequency is None else natural_frequency
        damping_ratio     = defaults["damping_ratio"]     if damping_ratio     is None else damping_ratio
        k_linear          = defaults["k_linear"]          if k_linear          is None else k_linear
        k_cubic           = defaults["k_cubic"]           if k_cubic           is None else k_cubic

        omega = 2.0 * np.pi * natural_frequency
        mass  = k_linear / omega ** 2

        return cls(mass = mass, damping = 2.0 * damping_ratio * np.sqrt(k_linear * mass),
            k_linear = k_linear, k_cubic = k_cubic, **kwargs)

def _acceleration(p, y, v, u):
    return (u - p.damping * v - p.k_linear * y - p.k_cubic * y * y * y) / p.mass

def _rk4(p, h, y, v, u0, um, u1):
    k1y = v
    k1v = _acceleration(p, y, v, u0)
    k2y = v + 0.5 * h * k1v
    k2v = _acceleration(p, y + 0.5 * h * k1y, v + 0.5 * h * k1v, um)
    k3y = v + 0.5 * h * k2v
    k3v = _acceleration(p, y + 0.5 * h * k2y, v + 0.5 * h * k2v, um)
    k4y = v + h * k3v
    k4v = _acceleration(p, y + h * k3y, v + h * k3v, u1)

    y = y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
    v = v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)

    return y, v

def _check(p, y, index):
    peak = np.max(np.abs(y))

    if not np.isfinite(peak) or peak > p.divergence_bound:
        raise DivergenceError("Duffing response exceeded %s at sample %s; the excitation likely drives the "
            "oscillator out of its fading-memory regime (chaotic or unbounded motion)." % (p.divergence_bound, index))

def simulate_duffing(params, u, sample_rate):
    """
    Integrate the oscillator from rest with fixed-step RK4 at ``sample_rate * oversample_factor``
    and return the displacement at the original sampling instants.

    The input is interpolated band-limited (FFT resampling of the record, exact for periodic
    multisines). A leading batch axis integrates several inputs at once.
    """
    u  = np.asarray(u, dtype = float)
    p  = params
    os = int(p.oversample_factor)
    n  = u.shape[-1]
    h  = 1.0 / (sample_rate * os)

    # half-step grid: step i uses samples 2i, 2i + 1 and 2i + 2
    fine = signal.resample(u, 2 * os * n, axis = -1)
    fine = np.moveaxis(fine, -1, 0)
    fine = fine.tolist() if fine.ndim == 1 else fine

    n_fine = 2 * os * n
    batch  = u.shape[:-1]
    y      = np.zeros(batch) if batch else 0.0
    v      = np.zeros(batch) if batch else 0.0
    out    = [ ]

    for j in range(n):
        out.append(y)

        for s in range(os):
            i = 2 * (j * os + s)
            y, v = _rk4(p, h, y, v, fine[i], fine[i + 1], fine[(i + 2) % n_fine])

        _check(p, y, j)

    return np.moveaxis(np.asarray(out, dtype = float), 0, -1)

class _DuffingStepper:
    """
    Sample-by-sample integration for loops, with the input linearly interpolated between
    consecutive samples.
    """
    def __init__(self, params, sample_rate, batch = ()):
        self.p      = params
        self.os     = int(params.oversample_factor)
        self.h      = 1.0 / (sample_rate * self.os)
        self.y      = np.zeros(batch)
        self.v      = np.zeros(batch)
        self.u_prev = np.zeros(batch)
        self.index  = 0

    def step(self, u):
        os, h   = self.os, self.h
        y, v    = self.y, self.v
        delta   = u - self.u_prev

        for s in range(os):
            u0 = self.u_prev + delta * (s / os)
            um = self.u_prev + delta * ((s + 0.5) / os)
            u1 = self.u_prev + delta * ((s + 1.0) / os)
            y, v = _rk4(self.p, h, y, v, u0, um, u1)

        _check(self.p, y, self.index)

        self.y, self.v, self.u_prev = y, v, np.array(u, dtype = float)
        self.index += 1

        return y
