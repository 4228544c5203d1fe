# imports - module imports
from nlsid.bla       import variance_ratio_experiment
from nlsid.exception import EstimationError

# imports - test imports
import pytest

def test_variance_ratio_cubic():
    result = variance_ratio_experiment(3, n_trials = 10000, n_samples = 1000, seed = 1)

    assert result.expected_ratio == 7
    assert 5.95 < result.ratio < 8.05
    assert result.mean_estimate == pytest.approx(3.0, rel = 0.02)

def test_variance_ratio_square():
    result = variance_ratio_experiment(2, n_trials = 10000, n_samples = 1000, seed = 2)

    assert result.expected_ratio == 5
    assert 4.25 < result.ratio < 5.75
    assert abs(result.mean_estimate) < 0.05

def test_variance_ratio_errors():
    with pytest.raises(EstimationError):
        variance_ratio_experiment(1, n_trials = 10, n_samples = 10)

    with pytest.raises(EstimationError):
        variance_ratio_experiment(3, n_trials = 1, n_samples = 10)
