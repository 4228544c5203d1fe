from functools import singledispatch

from nlsid.exception                import ConfigError
from nlsid.plant.duffing            import DuffingParams, simulate_duffing
from nlsid.plant.lti                import LtiFilter, simulate_lti
from nlsid.plant.mimo               import MimoLti, simulate_mimo
from nlsid.plant.polynomial         import StaticPolynomial, simulate_static
from nlsid.plant.wiener_hammerstein import WienerHammerstein, simulate_wh

@singledispatch
def simulate(system, u, sample_rate = None):
    """
    Steady-state open-loop response of ``system`` to the periodic input ``u`` (last axis time).
    """
    raise ConfigError("No simulator for systems of type %s." % type(system).__name__)

@simulate.register(StaticPolynomial)
def _(system, u, sample_rate = None):
    return simulate_static(system, u)

@simulate.register(LtiFilter)
def _(system, u, sample_rate = None):
    return simulate_lti(system, u, assume_periodic = True)

@simulate.register(WienerHammerstein)
def _(system, u, sample_rate = None):
    return simulate_wh(system, u, assume_periodic = True)

@simulate.register(DuffingParams)
def _(system, u, sample_rate = None):
    if not sample_rate:
        raise ConfigError("Duffing simulation needs the sample rate.")
    return simulate_duffing(system, u, sample_rate)

@simulate.register(MimoLti)
def _(system, u, sample_rate = None):
    return simulate_mimo(system, u, assume_periodic = True)
