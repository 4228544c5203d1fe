# imports - module imports
from nlsid.plant     import LtiFilter, MimoLti, simulate, simulate_lti
from nlsid.exception import ConfigError

# imports - test imports
import pytest
import numpy as np

def _plant():
    return MimoLti(filters = (
        (LtiFilter(numerator = (1.0,)),        LtiFilter(numerator = (0.0, 0.5))),
        (None,                                 LtiFilter(numerator = (0.3,), denominator = (1.0, -0.5)))
    ))

def test_simulate_mimo():
    plant = _plant()
    u     = np.random.default_rng(0).standard_normal((2, 64))
    y     = simulate(plant, u)

    f = plant.filters
    assert np.allclose(y[0], simulate_lti(f[0][0], u[0]) + simulate_lti(f[0][1], u[1]))
    assert np.allclose(y[1], simulate_lti(f[1][1], u[1]))

    G = plant.response([1, 2, 3], 64)
    assert G.shape == (3, 2, 2)
    assert np.all(G[:, 1, 0] == 0)

    with pytest.raises(ConfigError):
        simulate(plant, np.zeros((3, 64)))

    with pytest.raises(ConfigError):
        MimoLti(filters = ((LtiFilter(numerator = (1.0,)),), ()))
