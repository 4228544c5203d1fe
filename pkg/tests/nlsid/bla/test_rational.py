# imports - module imports
from nlsid.bla       import RationalModel, parameter_names
from nlsid.plant     import LtiFilter
from nlsid.exception import ConfigError

# imports - test imports
import pytest
import numpy as np

def test_rational_model():
    model = RationalModel.from_parameters([0.2, 0.1, -1.2, 0.5], 1, 2)

    assert model.numerator   == (0.2, 0.1)
    assert model.denominator == (1.0, -1.2, 0.5)
    assert (model.n_num, model.n_den) == (1, 2)
    assert model.parameter_names == ["b0", "b1", "a1", "a2"]
    assert np.allclose(model.parameters, [0.2, 0.1, -1.2, 0.5])

    bins = np.arange(1, 20)
    plant = LtiFilter(numerator = (0.2, 0.1), denominator = (1.0, -1.2, 0.5))

    assert np.allclose(model.response(bins, 64), plant.response(bins, 64))
    assert np.allclose(model.to_filter().response(bins, 64), plant.response(bins, 64))

    assert model.to_dict() == dict(numerator = [0.2, 0.1], denominator = [1.0, -1.2, 0.5])

def test_rational_model_errors():
    with pytest.raises(ConfigError):
        RationalModel(numerator = (1.0,), denominator = (2.0, 1.0))

    with pytest.raises(ConfigError):
        RationalModel(numerator = ())

    assert parameter_names(0, 0) == ["b0"]
