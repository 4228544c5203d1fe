from dataclasses import dataclass

import numpy as np

from nlsid.exception import ConfigError
from nlsid.plant.lti import simulate_lti

@dataclass(frozen = True, eq = False)
class MimoLti:
    """
    n_y x n_u matrix of LtiFilter, y_i = sum_j G_ij u_j. ``None`` entries are zero paths.
    """
    filters: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.filters)

        if not rows or len(set(len(row) for row in rows)) != 1:
            raise ConfigError("MIMO plant needs a non-empty rectangular filter matrix.")

        object.__setattr__(self, "filters", rows)

    @property
    def n_outputs(self):
        return len(self.filters)

    @property
    def n_inputs(self):
        return len(self.filters[0])

    def response(self, bins, n_samples):
        bins = np.asarray(bins)
        G    = np.zeros((bins.size, self.n_outputs, self.n_inputs), dtype = complex)

        for i, row in enumerate(self.filters):
            for j, filter_ in enumerate(row):
                if filter_ is not None:
                    G[:, i, j] = filter_.response(bins, n_samples)

        return G

def simulate_mimo(plant, u, assume_periodic = True):
    """
    ``u`` has shape (..., n_u, n); returns (..., n_y, n).
    """
    u = np.asarray(u, dtype = float)

    if u.shape[-2] != plant.n_inputs:
        raise ConfigError("Expected %s input channels, got %s." % (plant.n_inputs, u.shape[-2]))

    y = np.zeros(u.shape[:-2] + (plant.n_outputs, u.shape[-1]))

    for i, row in enumerate(plant.filters):
        for j, filter_ in enumerate(row):
            if filter_ is not None:
                y[..., i, :] += simulate_lti(filter_, u[..., j, :], assume_periodic = assume_periodic)

    return y
