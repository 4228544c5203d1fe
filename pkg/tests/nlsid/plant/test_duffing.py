# imports - module imports
from nlsid.design    import build_grid, synthesize_multisine
from nlsid.plant     import DuffingParams, simulate, simulate_duffing
from nlsid.exception import ConfigError, DivergenceError

# imports - test imports
import pytest
import numpy as np

def test_duffing_params():
    params = DuffingParams.from_resonance()

    assert params.natural_frequency == pytest.approx(65.0)
    assert params.damping_ratio     == pytest.approx(0.05)
    assert params.k_cubic           == 0.1

    with pytest.raises(ConfigError):
        DuffingParams(mass = 1.0, damping = 1.0, k_linear = 1.0, oversample_factor = 2)

    with pytest.raises(ConfigError):
        DuffingParams(mass = -1.0, damping = 1.0, k_linear = 1.0)

def test_simulate_duffing_linear():
    params = DuffingParams.from_resonance(natural_frequency = 50.0, damping_ratio = 0.1, k_cubic = 0.0)
    grid   = build_grid(1000, 1000, 5, 100, kind = "odd")
    real   = synthesize_multisine(grid, seed = 0)

    y = simulate(params, np.tile(real.samples, 2), sample_rate = 1000)[1000:]

    bins = grid.excited_bins
    G    = np.fft.rfft(y)[bins] / real.spectrum[bins]
    G0   = params.linear_response(grid.frequencies(bins))

    assert params.oversample_factor == 8
    assert np.max(np.abs(G - G0) / np.abs(G0)) < 1e-6

def _hardening(k_cubic = 0.1, **kwargs):
    return DuffingParams.from_resonance(natural_frequency = 50.0, damping_ratio = 0.1, k_cubic = k_cubic, **kwargs)

def _input(rms = 0.5, seed = 0, n_periods = 2):
    grid = build_grid(1000, 1000, 5, 100, kind = "odd")
    return np.tile(synthesize_multisine(grid, rms_target = rms, seed = seed).samples, n_periods)

def test_simulate_duffing_step_halving():
    u = _input()

    coarse = simulate(_hardening(), u, sample_rate = 1000)[1000:]
    fine   = simulate(_hardening(oversample_factor = 16), u, sample_rate = 1000)[1000:]

    assert np.sqrt(np.mean((coarse - fine) ** 2) / np.mean(fine ** 2)) < 1e-6

def test_simulate_duffing_periodic():
    y = simulate(_hardening(), _input(n_periods = 3), sample_rate = 1000)

    assert np.max(np.abs(y[2000:] - y[1000:2000])) < 1e-9 * np.max(np.abs(y))

def test_simulate_duffing_superposition():
    a, b = _input(rms = 1.0, seed = 1), _input(rms = 1.0, seed = 2)

    def violation(params):
        both = simulate(params, a + b, sample_rate = 1000)[1000:]
        sum_ = simulate(params, a, sample_rate = 1000)[1000:] + simulate(params, b, sample_rate = 1000)[1000:]
        return np.sqrt(np.mean((both - sum_) ** 2) / np.mean(both ** 2))

    assert violation(_hardening(k_cubic = 0.0)) < 1e-9
    assert violation(_hardening()) > 1e-2

def test_simulate_duffing_divergence():
    params = DuffingParams.from_resonance(divergence_bound = 1e-3)
    u      = np.ones(100)

    with pytest.raises(DivergenceError):
        simulate_duffing(params, u, 1000)

    with pytest.raises(ConfigError):
        simulate(params, u)

def test_duffing_stepper():
    params  = DuffingParams.from_resonance()
    u       = np.sin(2 * np.pi * 10 * np.arange(200) / 1000)

    stepper = params.stepper(1000, batch = (2,))
    stepped = np.array([stepper.step(np.array([x, 2 * x])) for x in u])

    assert stepped.shape == (200, 2)
    assert np.all(np.isfinite(stepped))
    assert np.max(np.abs(stepped[:, 1])) > np.max(np.abs(stepped[:, 0]))
