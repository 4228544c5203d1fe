from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from nlsid.exception import ConfigError

@dataclass(frozen = True, eq = False)
class StaticPolynomial:
    """
    y = constant + sum_alpha a_alpha u^alpha, with ``coefficients`` = (a_1, ..., a_n).
    """
    coefficients: tuple
    constant:     float = 0.0

    def __post_init__(self):
        coefficients = tuple(float(c) for c in np.atleast_1d(self.coefficients))

        if not coefficients:
            raise ConfigError("A static polynomial needs degree >= 1.")

        object.__setattr__(self, "coefficients", coefficients)

    @property
    def degree(self):
        return len(self.coefficients)

    @property
    def linear_gain(self):
        return self.coefficients[0]

    def series(self):
        return np.concatenate([[self.constant], self.coefficients])

    def __call__(self, u):
        return P.polyval(np.asarray(u, dtype = float), self.series())

def simulate_static(poly, u):
    return poly(u)
