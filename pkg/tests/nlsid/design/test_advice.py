# imports - module imports
from nlsid.design import advise_experiment, advise_grid_kind
from nlsid.design.grid import EVEN_DETECTION, ODD_DETECTION
from nlsid.exception   import ConfigError

# imports - test imports
import pytest

class _Report(object):
    def __init__(self, **levels):
        self.levels = levels

    def class_level(self, name):
        return self.levels.get(name)

def test_advise_experiment():
    advice = advise_experiment("none", 20)
    assert (advice.n_periods, advice.n_realizations) == (2, 10)

    advice = advise_experiment("detect", 20)
    assert (advice.n_periods, advice.n_realizations) == (10, 2)

    advice = advise_experiment("nl_dominant", 20)
    assert (advice.n_periods, advice.n_realizations) == (1, 20)

    with pytest.raises(ConfigError):
        advise_experiment("foobar", 20)

    with pytest.raises(ConfigError):
        advise_experiment("none", 1)

def test_advise_grid_kind():
    assert advise_grid_kind(_Report(**{EVEN_DETECTION: -20.0, ODD_DETECTION: -40.0})) == "odd"
    assert advise_grid_kind(_Report(**{EVEN_DETECTION: -60.0, ODD_DETECTION: -40.0})) == "full"
    assert advise_grid_kind(_Report()) == "full"
