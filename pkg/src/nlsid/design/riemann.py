from dataclasses import dataclass

import numpy as np
from scipy import integrate

from nlsid.exception import GridError

NO_LINES = "no lines"

@dataclass(frozen = True)
class BandPower:
    f_low:     float
    f_high:    float
    n_lines:   int
    power:     float
    target:    float
    deviation: float
    bound:     float
    flag:      str = None

def flat_psd(total_power, f_low, f_high):
    """
    One-sided PSD table carrying ``total_power`` uniformly over [f_low, f_high].
    """
    level = total_power / (f_high - f_low)
    return (np.array([f_low, f_high]), np.array([level, level]))

def _integrate(target_psd, f_low, f_high):
    if callable(target_psd):
        value, _ = integrate.quad(target_psd, f_low, f_high, limit = 200)
        return value

    freqs, values = (np.asarray(a, dtype = float) for a in target_psd)

    inside = freqs[(freqs > f_low) & (freqs < f_high)]
    points = np.concatenate([[f_low], inside, [f_high]])

    return float(integrate.trapezoid(np.interp(points, freqs, values, left = 0.0, right = 0.0), points))

def verify_riemann_band_power(realization, target_psd, bands):
    """
    Compare the power a realization puts in each band with the integral of a one-sided
    target PSD over the same band.

    Lines count when their center frequency falls in [f_low, f_high]; a line at bin k
    contributes 2 |X(k)|^2 / N^2 of time-domain power. ``target_psd`` is a callable of
    frequency or a ``(frequencies, values)`` table, linearly interpolated and zero outside.
    ``bound`` is the width of one frequency cell relative to the band, the order of the
    discretization error for a conforming design.
    """
    grid    = realization.grid
    f0      = grid.f0
    freqs   = grid.frequencies(grid.excited_bins)
    power_k = 2.0 * realization.amplitudes[grid.excited_bins] ** 2 / grid.n_samples

    report  = [ ]

    for f_low, f_high in bands:
        if not f_high > f_low:
            raise GridError("Band [%s, %s] Hz is empty." % (f_low, f_high))

        mask    = (freqs >= f_low) & (freqs <= f_high)
        n_lines = int(np.count_nonzero(mask))
        target  = _integrate(target_psd, f_low, f_high)
        bound   = f0 / (f_high - f_low)

        if not n_lines:
            report.append(BandPower(f_low = f_low, f_high = f_high, n_lines = 0, power = 0.0,
                target = target, deviation = float("nan"), bound = bound, flag = NO_LINES))
            continue

        power     = float(np.sum(power_k[mask]))
        deviation = abs(power - target) / target if target > 0 else float("inf")

        report.append(BandPower(f_low = f_low, f_high = f_high, n_lines = n_lines, power = power,
            target = target, deviation = deviation, bound = bound))

    return report
