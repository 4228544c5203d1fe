# imports - module imports
from nlsid.design    import build_grid
from nlsid.spectral  import Record, period_dfts, line_statistics
from nlsid.exception import EstimationError

# imports - test imports
import pytest
import numpy as np

def _spectra(M = 3, P = 4, N = 32):
    rng  = np.random.default_rng(1)
    grid = build_grid(1000, N, 40, 400)
    return period_dfts(Record(sample_rate = 1000.0, n_samples = N, n_periods = P, n_realizations = M,
        channels = dict(u = rng.standard_normal((M, P, N)), y = rng.standard_normal((M, P, N))), grid = grid))

def test_line_statistics():
    spectra  = _spectra()
    averages = line_statistics(spectra)

    U, Y = spectra["u"], spectra["y"]

    assert averages.n_averages == 4
    assert averages.n_groups   == 3
    assert averages.has_noise_estimate

    assert np.allclose(averages.mean_U, U.mean(axis = 1))
    assert np.allclose(averages.var_Y, np.var(Y, axis = 1, ddof = 1))

    dY = Y - Y.mean(axis = 1, keepdims = True)
    dU = U - U.mean(axis = 1, keepdims = True)
    assert np.allclose(averages.covar_YU, np.sum(dY * np.conj(dU), axis = 1) / 3)

    assert np.allclose(averages.var_of_mean("y"), averages.var_Y / 4)

def test_line_statistics_pooled():
    averages = line_statistics(_spectra(), scope = "pooled")

    assert averages.n_averages == 12
    assert averages.mean_U.shape == (1, 17)

def test_line_statistics_single_period():
    averages = line_statistics(_spectra(P = 1))

    assert not averages.has_noise_estimate
    assert averages.var_U is None
    assert averages.var_of_mean("u") is None

    with pytest.raises(EstimationError):
        line_statistics(_spectra(), scope = "foobar")

def test_line_statistics_noise_power():
    N, P  = 64, 10000
    sigma = 0.3
    rng   = np.random.default_rng(5)
    grid  = build_grid(1000, N, 40, 400)

    periodic = np.cos(2 * np.pi * 5 * np.arange(N) / N)
    y        = np.tile(periodic, (1, P, 1)) + sigma * rng.standard_normal((1, P, N))

    record   = Record(sample_rate = 1000.0, n_samples = N, n_periods = P, n_realizations = 1,
        channels = dict(u = np.tile(periodic, (1, P, 1)), y = y), grid = grid)
    averages = line_statistics(period_dfts(record))

    # white noise of variance sigma^2 has E|Y(k)|^2 = N sigma^2 under the unnormalized DFT
    assert np.allclose(averages.var_Y[0], N * sigma ** 2, rtol = 0.05)
    assert np.allclose(averages.var_U[0], 0.0, atol = 1e-20)
