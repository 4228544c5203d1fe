from dataclasses import dataclass

from nlsid.plant.lti        import LtiFilter, simulate_lti
from nlsid.plant.polynomial import StaticPolynomial

@dataclass(frozen = True, eq = False)
class WienerHammerstein:
    """
    Cascade R -> f -> S of a front filter, a static polynomial and a back filter.
    """
    front:        LtiFilter
    nonlinearity: StaticPolynomial
    back:         LtiFilter

    def stepper(self, batch = ()):
        return _WienerHammersteinStepper(self, batch)

class _WienerHammersteinStepper:
    def __init__(self, wh, batch):
        self.front = wh.front.stepper(batch)
        self.back  = wh.back.stepper(batch)
        self.f     = wh.nonlinearity

    def step(self, u):
        return self.back.step(self.f(self.front.step(u)))

def simulate_wh(wh, u, assume_periodic = True):
    x = simulate_lti(wh.front, u, assume_periodic = assume_periodic)
    return simulate_lti(wh.back, wh.nonlinearity(x), assume_periodic = assume_periodic)
