import math

import numpy as np
from scipy import integrate

from nlsid.exception import EstimationError

def _standard_moment(t, alpha):
    return t ** alpha * np.exp(-0.5 * t * t) / np.sqrt(2.0 * np.pi)

class GaussianMoments:
    """
    Raw moments mu_alpha of a zero-mean Gaussian with standard deviation ``std_dev``:
    zero for odd alpha, (alpha - 1)!! sigma^alpha for even alpha. Every moment up to
    ``order`` is checked against numeric integration of the density.
    """
    def __init__(self, std_dev, order = 4, check = True):
        if not std_dev >= 0:
            raise EstimationError("Standard deviation must be non-negative, got %s." % std_dev)

        self.std_dev = float(std_dev)
        self.order   = int(order)
        self.moments = {alpha: self._closed_form(alpha) for alpha in range(self.order + 1)}

        if check:
            self._check()

    @staticmethod
    def double_factorial(alpha):
        return float(math.prod(range(alpha - 1, 0, -2))) if alpha % 2 == 0 else 0.0

    def _closed_form(self, alpha):
        return self.double_factorial(alpha) * self.std_dev ** alpha

    def _check(self):
        # in units of sigma, mu_alpha / sigma^alpha
        for alpha in range(self.order + 1):
            expected = self.double_factorial(alpha)
            value, _ = integrate.quad(_standard_moment, -np.inf, np.inf, args = (alpha,))

            if abs(value - expected) > 1e-6 * max(1.0, expected):
                raise EstimationError("Gaussian moment of order %s: closed form %s, integral %s."
                    % (alpha, expected, value))

    def __getitem__(self, alpha):
        return self.moments[alpha] if alpha in self.moments else self._closed_form(alpha)

    def __repr__(self):
        return "<GaussianMoments std_dev=%s order=%s>" % (self.std_dev, self.order)
