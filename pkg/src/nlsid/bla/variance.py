from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__  import __name__ as NAME
from nlsid.exception import EstimationError

logger = log.get_logger(name = NAME)

_CHUNK_SAMPLES = 2 ** 22

@dataclass(frozen = True)
class VarianceRatioResult:
    """
    Observed variance of the least-squares gain estimate over trials against the mean
    variance predicted by the independent-noise theory. For y = u^n the ratio tends to
    2n + 1.
    """
    degree:               int
    n_trials:             int
    n_samples:            int
    std_dev:              float
    ratio:                float
    mean_estimate:        float
    observed_variance:    float
    theoretical_variance: float

    @property
    def expected_ratio(self):
        return 2 * self.degree + 1

def variance_ratio_experiment(degree, n_trials, n_samples, std_dev = 1.0, seed = 0):
    """
    Per trial draw u ~ N(0, std_dev^2), set y = u^degree and estimate a = sum(y u) / sum(u^2).
    The residual variance sum(e^2) / (n - 1) gives the independent-noise variance of the
    estimate, sigma_e^2 / sum(u^2).
    """
    if degree < 2:
        raise EstimationError("Degree %s is degenerate: the residual of a linear system vanishes." % degree)

    if n_trials < 2 or n_samples < 2:
        raise EstimationError("Need at least two trials of two samples.")

    rng       = np.random.default_rng(seed)
    chunk     = max(1, _CHUNK_SAMPLES // n_samples)
    estimates = np.empty(n_trials)
    theory    = np.empty(n_trials)

    for start in range(0, n_trials, chunk):
        stop = min(start + chunk, n_trials)
        u    = std_dev * rng.standard_normal((stop - start, n_samples))
        y    = u ** degree

        power = np.sum(u * u, axis = 1)
        a     = np.sum(y * u, axis = 1) / power
        e     = y - a[:, None] * u

        estimates[start:stop] = a
        theory[start:stop]    = np.sum(e * e, axis = 1) / (n_samples - 1) / power

    observed = float(np.var(estimates, ddof = 1))
    expected = float(np.mean(theory))
    ratio    = observed / expected

    logger.info("Variance ratio for degree %s: %.3f (%s trials of %s samples)." % (degree, ratio, n_trials, n_samples))

    return VarianceRatioResult(degree = int(degree), n_trials = int(n_trials), n_samples = int(n_samples),
        std_dev = float(std_dev), ratio = ratio, mean_estimate = float(np.mean(estimates)),
        observed_variance = observed, theoretical_variance = expected)
