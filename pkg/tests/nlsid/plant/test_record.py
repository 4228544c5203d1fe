# imports - module imports
from nlsid.design    import build_grid, synthesize_multisine
from nlsid.plant     import DuffingParams, LtiFilter, NoiseSpec, derive_seed, steady_state_record
from nlsid.exception import ConfigError, PipelineError, DivergenceError

# imports - test imports
import pytest
import numpy as np

def _excitation():
    grid = build_grid(1000, 128, 5, 300, kind = "odd")
    return synthesize_multisine(grid, seed = 0)

def test_steady_state_record():
    plant  = LtiFilter(numerator = (0.2, 0.1), denominator = (1.0, -1.2, 0.5))
    record = steady_state_record(plant, _excitation(), realizations = 3, periods_keep = 2, seed = 9)

    assert record.u.shape == (3, 2, 128)
    assert record.channel_names == ["u", "y"]

    # periodic steady state without noise
    assert np.allclose(record.y[:, 0], record.y[:, 1])
    assert not np.allclose(record.u[0], record.u[1])

    assert record.provenance["realization_seeds"] == [derive_seed(9, m) for m in range(3)]

    again = steady_state_record(plant, _excitation(), realizations = 3, periods_keep = 2, seed = 9)
    assert again == record

def test_steady_state_record_noise():
    plant  = LtiFilter(numerator = (1.0,))
    noise  = NoiseSpec(std_dev = 0.1, seed = 4)
    record = steady_state_record(plant, _excitation(), realizations = 2, noise = noise, store_noise = True)

    assert "v" in record.channels
    assert np.allclose(record.y, record.u + record.channels["v"])

def test_steady_state_record_errors():
    with pytest.raises(ConfigError):
        steady_state_record(LtiFilter(numerator = (1.0,)), _excitation(), periods_keep = 0)

    with pytest.raises(ConfigError):
        steady_state_record(LtiFilter(numerator = (1.0,)), _excitation(), realizations = 0)

    params = DuffingParams.from_resonance(divergence_bound = 1e-6)

    with pytest.raises(PipelineError) as info:
        steady_state_record(params, _excitation(), realizations = 2)

    assert info.value.realization == 0
    assert isinstance(info.value.error, DivergenceError)
