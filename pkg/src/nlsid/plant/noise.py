from dataclasses import dataclass

import numpy as np
from scipy import signal

from nlsid.exception import ConfigError
from nlsid.plant.lti import LtiFilter

def derive_seed(seed, index):
    """
    64-bit seed of realization ``index``: the first word of
    ``SeedSequence([seed, index]).generate_state(2, uint64)`` shifted right by one bit.
    """
    state = np.random.SeedSequence([int(seed), int(index)]).generate_state(2, dtype = np.uint64)
    return int(state[0] >> np.uint64(1))

@dataclass(frozen = True, eq = False)
class NoiseSpec:
    """
    Additive output noise: white Gaussian with ``std_dev`` before the optional ``shaping`` filter.
    """
    std_dev: float     = 0.0
    shaping: LtiFilter = None
    seed:    int       = 0

    def __post_init__(self):
        if self.std_dev < 0:
            raise ConfigError("Noise std_dev must be non-negative, got %s." % self.std_dev)

    @property
    def is_silent(self):
        return self.std_dev == 0

    def generate(self, n_samples, index = 0, batch = ()):
        """
        Noise of realization ``index``; equal (seed, index) always give equal sequences.
        """
        shape = tuple(batch) + (n_samples,)

        if self.is_silent:
            return np.zeros(shape)

        rng = np.random.default_rng(derive_seed(self.seed, index))

        if self.shaping is None:
            return self.std_dev * rng.standard_normal(shape)

        # one block of warm-up brings the shaping filter to stationarity
        white = self.std_dev * rng.standard_normal(tuple(batch) + (2 * n_samples,))
        return signal.lfilter(self.shaping.b, self.shaping.a, white, axis = -1)[..., n_samples:]

    @classmethod
    def from_dict(cls, data):
        if not data:
            return cls()

        shaping = data.get("shaping")

        return cls(std_dev = float(data.get("std_dev", 0.0)),
            shaping = LtiFilter.from_dict(shaping) if shaping else None, seed = int(data.get("seed", 0)))
