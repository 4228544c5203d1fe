# imports - module imports
from nlsid.bla        import theoretical_bla_static
from nlsid.closedloop import indirect_frf, predict_closed_loop_frf
from nlsid.design     import build_grid, synthesize_multisine
from nlsid.plant      import ClosedLoopScenario, LtiFilter, NoiseSpec, StaticPolynomial, steady_state_record
from nlsid.exception  import EstimationError

# imports - test imports
import pytest
import numpy as np

PLANT      = LtiFilter(numerator = (0.5, 0.2))
CONTROLLER = LtiFilter(numerator = (0.4,))

def _record(noise = None, realizations = 4, periods = 2):
    grid     = build_grid(1000, 256, 1, 400, kind = "odd")
    real     = synthesize_multisine(grid, seed = 0)
    scenario = ClosedLoopScenario(plant = PLANT, controller = CONTROLLER)
    return scenario, steady_state_record(scenario, real, realizations = realizations, periods_keep = periods,
        noise = noise, seed = 3)

def test_indirect_frf_noise_free():
    _, record = _record()
    estimate  = indirect_frf(record)

    G = PLANT.response(estimate.bins, 256)

    assert np.allclose(estimate.G_bla_r,  G, atol = 1e-8)
    assert np.allclose(estimate.G_direct, G, atol = 1e-8)
    assert np.allclose(estimate.bias, 0.0, atol = 1e-8)
    assert np.allclose(estimate.Y_S, 0.0, atol = 1e-6)

    assert (estimate.n_realizations, estimate.n_periods) == (4, 2)
    assert estimate.var_bla_r is not None
    assert not np.any(estimate.flagged)

def test_indirect_frf_noise():
    sigma            = 3.5
    scenario, record = _record(noise = NoiseSpec(std_dev = sigma, seed = 1), realizations = 40, periods = 4)
    estimate         = indirect_frf(record)

    bins  = estimate.bins
    G     = PLANT.response(bins, 256)
    C     = scenario.effective_controller(bins, 256)
    S_VV  = sigma ** 2 * 256

    G_tilde = predict_closed_loop_frf(G, C, estimate.spectra["RR"], S_VV).G_tilde

    # the direct estimate is pulled to the noise-driven FRF, the reference-based one is not
    assert np.mean(np.abs(estimate.G_direct - G_tilde)) < 0.5 * np.mean(np.abs(G - G_tilde))
    assert np.mean(np.abs(estimate.G_bla_r - G)) < 0.5 * np.mean(np.abs(estimate.G_direct - G))

    assert np.all(np.isfinite(estimate.var_bias))

def test_indirect_frf_cubic_plant():
    grid     = build_grid(1000, 1024, 1, 400, kind = "odd_sparse", group_size = 4, seed = 9)
    real     = synthesize_multisine(grid, rms_target = 0.5, seed = 0)
    plant    = StaticPolynomial(coefficients = (1.0, 0.0, 0.2))
    scenario = ClosedLoopScenario(plant = plant, controller = CONTROLLER)
    record   = steady_state_record(scenario, real, realizations = 100, noise = NoiseSpec(std_dev = 1e-3, seed = 17),
        seed = 5)
    estimate = indirect_frf(record)

    # the nonlinear distortions fed back through C bias the direct estimate
    z_bias = np.abs(estimate.bias) / np.sqrt(estimate.var_bias)
    assert np.mean(z_bias > 3.0) >= 0.2

    # the reference-based estimate is the Bussgang gain at the plant input level
    alpha = theoretical_bla_static(plant, float(np.std(record.u)))
    z_bla = np.abs(estimate.G_bla_r - alpha) / np.sqrt(estimate.var_bla_r)
    assert np.mean(z_bla <= 3.0) >= 0.9

def test_indirect_frf_errors():
    grid   = build_grid(1000, 256, 1, 400, kind = "odd")
    record = steady_state_record(PLANT, synthesize_multisine(grid))

    with pytest.raises(EstimationError):
        indirect_frf(record)

    _, record = _record(realizations = 1)
    assert indirect_frf(record).var_bla_r is None
