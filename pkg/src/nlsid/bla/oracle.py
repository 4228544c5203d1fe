import numpy as np

from nlsid.bla.moments      import GaussianMoments
from nlsid.exception        import ConfigError, EstimationError
from nlsid.design.multisine import line_amplitudes

BRANCHES = ("front", "back")

def theoretical_bla_static(poly, std_dev):
    """
    BLA gain of a static polynomial driven by zero-mean Gaussian noise,
    a_BLA = sum_k a_k mu_(k+1) / mu_2. Even-degree terms do not contribute.
    """
    if std_dev == 0:
        return float(poly.linear_gain)

    moments = GaussianMoments(std_dev, order = poly.degree + 1)

    return float(sum(a * moments[k + 1] for k, a in enumerate(poly.coefficients, start = 1)) / moments[2])

def theoretical_bla_wh_cubic(front, back, input_amplitudes, n_samples, branch = "front", gain = 1.0):
    """
    BLA of R -> gain * x^3 -> S for a random-phase multisine with line amplitudes
    ``input_amplitudes`` (mapping bin -> |U(k)| as |DFT| / N).

        G(k) = gain * S(k) R(k) (6 sum_l |B(l)|^2 |U(l)|^2 - 3 |B(k)|^2 |U(k)|^2)

    where B is the front filter R (``branch = "front"``, the signal entering the cubic) or
    the back filter S (``branch = "back"``). Returned per bin in increasing bin order.
    """
    if branch not in BRANCHES:
        raise ConfigError("Unknown branch '%s'. Available: %s." % (branch, ", ".join(BRANCHES)))

    if not input_amplitudes:
        raise EstimationError("No excited lines.")

    bins  = np.asarray(sorted(int(k) for k in input_amplitudes))
    U2    = np.asarray([float(input_amplitudes[k]) for k in bins]) ** 2

    R     = front.response(bins, n_samples)
    S     = back.response(bins, n_samples)
    B2    = np.abs(R if branch == "front" else S) ** 2

    power = np.sum(B2 * U2)

    return gain * S * R * (6.0 * power - 3.0 * B2 * U2)

def theoretical_bla_wh(wh, realization, branch = "front"):
    """
    BLA of a Wiener-Hammerstein system with a nonlinearity of degree at most three for the
    amplitudes of ``realization``; the linear term adds gain a_1 R S, the quadratic term
    does not contribute.
    """
    coefficients = wh.nonlinearity.coefficients

    if len(coefficients) > 3 and any(coefficients[3:]):
        raise ConfigError("Analytic Wiener-Hammerstein BLA covers degrees up to three only.")

    grid       = realization.grid
    bins       = grid.excited_bins
    lines      = line_amplitudes(realization)
    amplitudes = {int(k): lines[k] for k in bins}

    G = coefficients[0] * wh.back.response(bins, grid.n_samples) * wh.front.response(bins, grid.n_samples)

    if len(coefficients) >= 3 and coefficients[2]:
        G = G + theoretical_bla_wh_cubic(wh.front, wh.back, amplitudes, grid.n_samples,
            branch = branch, gain = coefficients[2])

    return G
