from nlsid.bla.moments  import GaussianMoments
from nlsid.bla.oracle   import (
    theoretical_bla_static,
    theoretical_bla_wh_cubic,
    theoretical_bla_wh,
    BRANCHES
)
from nlsid.bla.rational import RationalModel, parameter_names
from nlsid.bla.fit      import FitResult, fit_frf, COVARIANCE_FLAG
from nlsid.bla.variance import VarianceRatioResult, variance_ratio_experiment
