from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from nlsid.exception import ConfigError
from nlsid.plant.lti import LtiFilter

@dataclass(frozen = True, eq = False)
class RationalModel:
    """
    G(z) = (b_0 + b_1 z^-1 + ... + b_nn z^-nn) / (1 + a_1 z^-1 + ... + a_nd z^-nd).
    """
    numerator:   tuple
    denominator: tuple = (1.0,)

    def __post_init__(self):
        b = tuple(float(x) for x in np.atleast_1d(self.numerator))
        a = tuple(float(x) for x in np.atleast_1d(self.denominator))

        if not b or not a:
            raise ConfigError("Empty model coefficients.")

        if a[0] != 1.0:
            raise ConfigError("Denominator constant term must be 1, got %s." % a[0])

        object.__setattr__(self, "numerator",   b)
        object.__setattr__(self, "denominator", a)

    @property
    def n_num(self):
        return len(self.numerator) - 1

    @property
    def n_den(self):
        return len(self.denominator) - 1

    @property
    def parameters(self):
        return np.asarray(self.numerator + self.denominator[1:])

    @property
    def parameter_names(self):
        return parameter_names(self.n_num, self.n_den)

    @classmethod
    def from_parameters(cls, theta, n_num, n_den):
        theta = np.asarray(theta, dtype = float)
        return cls(numerator = tuple(theta[:n_num + 1]), denominator = (1.0,) + tuple(theta[n_num + 1:]))

    def frequency_response(self, omega):
        z = np.exp(-1j * np.asarray(omega, dtype = float))
        return P.polyval(z, self.numerator) / P.polyval(z, self.denominator)

    def response(self, bins, n_samples):
        return self.frequency_response(2.0 * np.pi * np.asarray(bins) / n_samples)

    def to_filter(self):
        return LtiFilter(numerator = self.numerator, denominator = self.denominator)

    def to_dict(self):
        return dict(numerator = list(self.numerator), denominator = list(self.denominator))

def parameter_names(n_num, n_den):
    return ["b%s" % i for i in range(n_num + 1)] + ["a%s" % i for i in range(1, n_den + 1)]
