from dataclasses import dataclass

import numpy as np
from scipy import signal

from nlsid.exception import ConfigError, UnstableSystemError

@dataclass(frozen = True, eq = False)
class LtiFilter:
    """
    Discrete-time transfer function in the delay operator q^-1,

        G(q) = gain * (b_0 + b_1 q^-1 + ...) / (1 + a_1 q^-1 + ...).

    The denominator is normalized to a leading 1 and every pole must lie strictly inside
    the unit circle.
    """
    numerator:   tuple
    denominator: tuple = (1.0,)
    gain:        float = 1.0

    def __post_init__(self):
        b = np.atleast_1d(np.asarray(self.numerator,   dtype = float))
        a = np.atleast_1d(np.asarray(self.denominator, dtype = float))

        if not b.size or not a.size:
            raise ConfigError("Empty filter coefficients.")

        if a[0] == 0:
            raise ConfigError("Denominator leading coefficient must be nonzero.")

        b, a = b / a[0], a / a[0]

        poles = self.poles_of(a)
        if poles.size and np.max(np.abs(poles)) >= 1.0:
            raise UnstableSystemError("Filter has poles on or outside the unit circle: %s." % poles)

        object.__setattr__(self, "numerator",   tuple(b))
        object.__setattr__(self, "denominator", tuple(a))

    @staticmethod
    def poles_of(denominator):
        return np.roots(np.trim_zeros(np.asarray(denominator, dtype = float), "b"))

    @property
    def b(self):
        return self.gain * np.asarray(self.numerator)

    @property
    def a(self):
        return np.asarray(self.denominator)

    @property
    def poles(self):
        return self.poles_of(self.a)

    @property
    def order(self):
        return max(len(self.numerator), len(self.denominator)) - 1

    def frequency_response(self, omega):
        _, h = signal.freqz(self.b, self.a, worN = np.atleast_1d(np.asarray(omega, dtype = float)))
        return h

    def response(self, bins, n_samples):
        """
        G(exp(j 2 pi k / N)) at the given bins.
        """
        return self.frequency_response(2.0 * np.pi * np.asarray(bins) / n_samples)

    def series(self, other):
        return LtiFilter(numerator = tuple(np.convolve(self.b, other.b)),
            denominator = tuple(np.convolve(self.a, other.a)))

    def scaled(self, gain):
        return LtiFilter(numerator = self.numerator, denominator = self.denominator, gain = self.gain * gain)

    def simulate(self, u, assume_periodic = True):
        return simulate_lti(self, u, assume_periodic = assume_periodic)

    def stepper(self, batch = ()):
        return LtiStepper(self, batch = batch)

    @classmethod
    def identity(cls, gain = 1.0):
        return cls(numerator = (1.0,), gain = gain)

    @classmethod
    def delay(cls, n = 1, gain = 1.0):
        return cls(numerator = tuple([0.0] * n + [1.0]), gain = gain)

    @classmethod
    def from_dict(cls, data):
        return cls(numerator = tuple(data["numerator"]),
            denominator = tuple(data.get("denominator", (1.0,))), gain = data.get("gain", 1.0))

    def to_dict(self):
        return dict(numerator = list(self.numerator), denominator = list(self.denominator), gain = self.gain)

class LtiStepper:
    """
    Sample-by-sample transposed direct form II evaluation, vectorized over a batch shape.
    """
    def __init__(self, filter_, batch = ()):
        n      = filter_.order + 1
        self.b = np.zeros(n)
        self.a = np.zeros(n)

        self.b[:len(filter_.b)] = filter_.b
        self.a[:len(filter_.a)] = filter_.a

        self.state = np.zeros(tuple(batch) + (n - 1,))

    def step(self, x):
        b, a, z = self.b, self.a, self.state

        y = b[0] * x + (z[..., 0] if z.shape[-1] else 0.0)

        n = z.shape[-1]
        for i in range(n):
            nxt        = z[..., i + 1] if i + 1 < n else 0.0
            z[..., i]  = b[i + 1] * x + nxt - a[i + 1] * y

        return y

def simulate_lti(filter_, u, assume_periodic = True):
    """
    Filter along the last axis. With ``assume_periodic`` the steady-state response of the
    periodic extension of ``u`` is computed exactly by multiplication on the DFT grid,
    otherwise the difference equation runs from zero initial state.
    """
    u = np.asarray(u, dtype = float)

    if assume_periodic:
        n = u.shape[-1]
        H = filter_.response(np.arange(n // 2 + 1), n)
        return np.fft.irfft(np.fft.rfft(u, axis = -1) * H, n = n, axis = -1)

    return signal.lfilter(filter_.b, filter_.a, u, axis = -1)
