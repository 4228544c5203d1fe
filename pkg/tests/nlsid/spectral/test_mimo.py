# imports - module imports
from nlsid.design    import build_grid, synthesize_multisine, orthogonal_multisines
from nlsid.plant     import LtiFilter, MimoLti, mimo_records
from nlsid.spectral  import mimo_frf
from nlsid.exception import EstimationError

# imports - test imports
import pytest
import numpy as np

def _plant():
    return MimoLti(filters = (
        (LtiFilter(numerator = (1.0, 0.3)),                           LtiFilter(numerator = (0.0, 0.5))),
        (LtiFilter(numerator = (0.2,), denominator = (1.0, -0.6)),   LtiFilter(numerator = (0.7,)))
    ))

def test_mimo_frf():
    grid    = build_grid(1000, 128, 5, 400)
    inputs  = orthogonal_multisines(synthesize_multisine(grid, seed = 3), 2)
    plant   = _plant()
    records = mimo_records(plant, inputs)

    assert len(records) == 2
    assert records[0].channel_names == ["u0", "u1", "y0", "y1"]

    estimate = mimo_frf(records, inputs = inputs)

    assert estimate.G.shape == (grid.n_excited, 2, 2)
    assert (estimate.n_outputs, estimate.n_inputs) == (2, 2)
    assert np.allclose(estimate.condition, 1.0)
    assert not np.any(estimate.flagged)

    assert np.allclose(estimate.G, plant.response(grid.excited_bins, 128), atol = 1e-10)

def test_mimo_frf_errors():
    grid    = build_grid(1000, 128, 5, 400)
    inputs  = orthogonal_multisines(synthesize_multisine(grid, seed = 3), 2)
    records = mimo_records(_plant(), inputs)

    with pytest.raises(EstimationError):
        mimo_frf([ ])

    with pytest.raises(EstimationError):
        mimo_frf(records[:1])

def test_mimo_frf_ill_conditioned():
    grid    = build_grid(1000, 128, 5, 400)
    inputs  = orthogonal_multisines(synthesize_multisine(grid, seed = 3), 2)
    records = mimo_records(_plant(), inputs)

    # the same experiment twice: a singular input matrix
    estimate = mimo_frf([records[0], records[0]])

    assert np.all(estimate.flagged)
    assert np.all(np.isnan(estimate.G))
