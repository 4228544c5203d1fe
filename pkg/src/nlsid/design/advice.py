from dataclasses import dataclass

from bpyutils import log

from nlsid.__attr__    import __name__ as NAME
from nlsid.design.grid import EVEN_DETECTION, ODD_DETECTION
from nlsid.exception   import ConfigError

logger = log.get_logger(name = NAME)

PRIORS = ("none", "detect", "nl_dominant")

@dataclass(frozen = True)
class ExperimentAdvice:
    n_periods:      int
    n_realizations: int
    note:           str

def advise_experiment(prior, budget_periods):
    """
    Split a measurement budget (total number of periods P * M) over periods and realizations.

    * ``none``:        nothing known, P = 2 and as many realizations as possible.
    * ``detect``:      only detection and a rough level are wanted, M = 2 and P as large as possible.
    * ``nl_dominant``: distortions are known to dominate the noise, P = 1 and M = budget.
    """
    if prior not in PRIORS:
        raise ConfigError("Unknown prior '%s'. Available: %s." % (prior, ", ".join(PRIORS)))

    if budget_periods < 2:
        raise ConfigError("A budget of at least 2 periods is required, got %s." % budget_periods)

    if prior == "none":
        advice = ExperimentAdvice(n_periods = 2, n_realizations = budget_periods // 2,
            note = "periods separate noise from distortions, realizations average the distortions")
    elif prior == "detect":
        advice = ExperimentAdvice(n_periods = budget_periods // 2, n_realizations = 2,
            note = "long periods lower the noise floor on the detection lines")
    else:
        logger.warning("With a single period the disturbing noise level is not estimated.")
        advice = ExperimentAdvice(n_periods = 1, n_realizations = budget_periods,
            note = "noise is not estimated, all time goes to averaging the distortions")

    return advice

def advise_grid_kind(report):
    """
    Pick the excitation grid for the next experiment from a distortion report.
    Dominant even distortions call for an odd grid, odd-only distortions for a full one.
    """
    even = report.class_level(EVEN_DETECTION)
    odd  = report.class_level(ODD_DETECTION)

    if even is not None and (odd is None or even > odd):
        return "odd"

    return "full"
