from dataclasses import dataclass, field

import numpy as np

from nlsid.design.grid import FrequencyGrid
from nlsid.exception   import RecordFormatError

CHANNEL_ORDER = ("r", "u", "y", "v")

def _channel_key(name):
    return (CHANNEL_ORDER.index(name) if name in CHANNEL_ORDER else len(CHANNEL_ORDER), name)

@dataclass(eq = False)
class Record:
    """
    Steady-state periodic data: every channel has shape (M, P, N) for M realizations of
    P periods of N samples.
    """
    sample_rate:    float
    n_samples:      int
    n_periods:      int
    n_realizations: int
    channels:       dict
    grid:           FrequencyGrid
    provenance:     dict = field(default_factory = dict)

    def __post_init__(self):
        M, P, N  = self.n_realizations, self.n_periods, self.n_samples
        expected = M * P * N

        if min(M, P, N) < 1:
            raise RecordFormatError("Record needs M, P, N >= 1, got M = %s, P = %s, N = %s." % (M, P, N))

        channels = dict()

        for name in sorted(self.channels, key = _channel_key):
            data = np.asarray(self.channels[name], dtype = float)

            if data.size != expected:
                raise RecordFormatError("Channel '%s' holds %s samples, expected M*P*N = %s." % (name, data.size, expected))

            channels[name] = data.reshape(M, P, N)

        for prefix in ("u", "y"):
            if not any(name.startswith(prefix) for name in channels):
                raise RecordFormatError("Record has no '%s' channel, got %s." % (prefix, list(channels)))

        if self.grid.n_samples != N or self.grid.sample_rate != self.sample_rate:
            raise RecordFormatError("Grid (N = %s, fs = %s) does not match the record (N = %s, fs = %s)."
                % (self.grid.n_samples, self.grid.sample_rate, N, self.sample_rate))

        self.channels = channels

    @property
    def channel_names(self):
        return list(self.channels)

    @property
    def is_closed_loop(self):
        return "r" in self.channels

    @property
    def u(self):
        return self.channels["u"]

    @property
    def y(self):
        return self.channels["y"]

    @property
    def r(self):
        return self.channels.get("r")

    def flat(self, name):
        return self.channels[name].ravel()

    def __eq__(self, other):
        if not isinstance(other, Record):
            return NotImplemented

        return (self.sample_rate == other.sample_rate and self.n_samples == other.n_samples
            and self.n_periods == other.n_periods and self.n_realizations == other.n_realizations
            and self.grid == other.grid and self.provenance == other.provenance
            and self.channel_names == other.channel_names
            and all(np.array_equal(self.channels[k], other.channels[k]) for k in self.channels))
