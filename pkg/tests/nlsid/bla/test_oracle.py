# imports - module imports
from nlsid.bla       import (
    theoretical_bla_static,
    theoretical_bla_wh_cubic,
    theoretical_bla_wh
)
from nlsid.design    import build_grid, synthesize_multisine, line_amplitudes
from nlsid.plant     import LtiFilter, StaticPolynomial, WienerHammerstein, steady_state_record
from nlsid.spectral  import robust_method
from nlsid.exception import ConfigError, EstimationError

# imports - test imports
import pytest
import numpy as np

def test_theoretical_bla_static():
    poly = StaticPolynomial(coefficients = (1.0, 0.3, 0.5))

    assert theoretical_bla_static(poly, 0.0) == 1.0
    assert theoretical_bla_static(poly, 1.0) == pytest.approx(2.5)
    assert theoretical_bla_static(poly, 2.0) == pytest.approx(1.0 + 0.5 * 3 * 4)

def test_theoretical_bla_static_even_terms():
    odd = StaticPolynomial(coefficients = (1.0, 0.0, 0.5))

    for std_dev in (0.3, 1.0, 2.0):
        for coefficients in ((1.0, 0.7, 0.5), (1.0, 0.0, 0.5, 0.2), (1.0, -0.4, 0.5, 0.1)):
            poly = StaticPolynomial(coefficients = coefficients, constant = 0.3)
            assert theoretical_bla_static(poly, std_dev) == pytest.approx(theoretical_bla_static(odd, std_dev))

def test_theoretical_bla_static_monte_carlo():
    poly = StaticPolynomial(coefficients = (1.0, 0.3, 0.5))
    u    = np.random.default_rng(0).standard_normal(1000000)
    a    = np.sum(poly(u) * u) / np.sum(u * u)

    assert a == pytest.approx(theoretical_bla_static(poly, 1.0), rel = 0.02)

def test_theoretical_bla_wh_cubic():
    identity = LtiFilter(numerator = (1.0,))
    lines    = {1: 0.5, 3: 0.5, 5: 0.5}

    # 6 * sum |U|^2 - 3 |U_k|^2
    G = theoretical_bla_wh_cubic(identity, identity, lines, 64)
    assert np.allclose(G, 6 * 0.75 - 3 * 0.25)

    G = theoretical_bla_wh_cubic(identity, identity, lines, 64, branch = "back", gain = 2.0)
    assert np.allclose(G, 2.0 * (6 * 0.75 - 3 * 0.25))

    with pytest.raises(ConfigError):
        theoretical_bla_wh_cubic(identity, identity, lines, 64, branch = "foobar")

    with pytest.raises(EstimationError):
        theoretical_bla_wh_cubic(identity, identity, { }, 64)

def test_theoretical_bla_wh_measured():
    wh   = WienerHammerstein(
        front        = LtiFilter(numerator = (1.0, 0.5)),
        nonlinearity = StaticPolynomial(coefficients = (1.0, 0.0, 0.5)),
        back         = LtiFilter(numerator = (0.6,), denominator = (1.0, -0.4))
    )
    grid = build_grid(1000, 512, 1, 200, kind = "odd")
    real = synthesize_multisine(grid, rms_target = 0.5, seed = 0)

    frf  = robust_method(steady_state_record(wh, real, realizations = 200, periods_keep = 1, seed = 5))
    se   = np.sqrt(frf.var_total)

    # the E_Y term follows the filter in front of the cubic, not the one behind it
    front = np.abs(frf.G - theoretical_bla_wh(wh, real)) <= 3.0 * se
    back  = np.abs(frf.G - theoretical_bla_wh(wh, real, branch = "back")) <= 3.0 * se

    assert np.mean(front) >= 0.9
    assert np.mean(back)  <  0.5

    lines = line_amplitudes(real)
    assert lines[grid.excited_bins[0]] > 0

def test_theoretical_bla_wh_degree():
    wh   = WienerHammerstein(
        front        = LtiFilter(numerator = (1.0,)),
        nonlinearity = StaticPolynomial(coefficients = (1.0, 0.0, 0.0, 0.1)),
        back         = LtiFilter(numerator = (1.0,))
    )
    grid = build_grid(1000, 512, 1, 200)

    with pytest.raises(ConfigError):
        theoretical_bla_wh(wh, synthesize_multisine(grid))
