from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__                 import __name__ as NAME
from nlsid                          import settings
from nlsid.exception                import ConfigError, DivergenceError, UnstableSystemError
from nlsid.plant.duffing            import DuffingParams
from nlsid.plant.lti                import LtiFilter
from nlsid.plant.noise              import NoiseSpec
from nlsid.plant.polynomial         import StaticPolynomial
from nlsid.plant.wiener_hammerstein import WienerHammerstein

logger = log.get_logger(name = NAME)

def linear_part(plant):
    """
    Small-signal LTI part of a discrete-time plant, ``None`` when not available.
    """
    if isinstance(plant, LtiFilter):
        return plant
    if isinstance(plant, StaticPolynomial):
        return LtiFilter.identity(gain = plant.linear_gain)
    if isinstance(plant, WienerHammerstein):
        return plant.front.series(plant.back).scaled(plant.nonlinearity.linear_gain)
    return None

@dataclass(frozen = True, eq = False)
class ClosedLoopScenario:
    """
    Feedback loop u(t) = g r(t) - (C y)(t - 1) around ``plant``. The one-sample delay sits in
    the feedback path, so the effective controller seen by every frequency-domain identity
    is exp(-j 2 pi k / N) C(k).
    """
    plant:            object
    controller:       LtiFilter
    reference_gain:   float = 1.0
    sample_rate:      float = None
    divergence_bound: float = None

    def __post_init__(self):
        if self.divergence_bound is None:
            object.__setattr__(self, "divergence_bound", float(settings.get("divergence_bound")))

        if isinstance(self.plant, DuffingParams) and not self.sample_rate:
            raise ConfigError("A Duffing plant inside a loop needs the sample rate.")

        polynomial = self.loop_polynomial()

        if polynomial is None:
            logger.warning("Loop stability is not checked for plants without a discrete-time linear part.")
        else:
            roots = np.roots(np.trim_zeros(polynomial, "b"))
            if roots.size and np.max(np.abs(roots)) >= 1.0:
                raise UnstableSystemError("Linearized loop 1 + q^-1 G C has roots outside the unit circle: %s." % roots)

    def loop_polynomial(self):
        """
        A A_c + q^-1 B B_c for the linearized plant B/A and controller B_c/A_c.
        """
        G = linear_part(self.plant)

        if G is None:
            return None

        C     = self.controller
        left  = np.convolve(G.a, C.a)
        right = np.concatenate([[0.0], np.convolve(G.b, C.b)])
        size  = max(left.size, right.size)

        return np.pad(left, (0, size - left.size)) + np.pad(right, (0, size - right.size))

    def effective_controller(self, bins, n_samples):
        bins = np.asarray(bins)
        return np.exp(-2j * np.pi * bins / n_samples) * self.controller.response(bins, n_samples)

    def plant_stepper(self, batch = ()):
        plant = self.plant

        if isinstance(plant, DuffingParams):
            return plant.stepper(self.sample_rate, batch = batch)
        if isinstance(plant, StaticPolynomial):
            return _StaticStepper(plant)
        if isinstance(plant, (LtiFilter, WienerHammerstein)):
            return plant.stepper(batch = batch)

        raise ConfigError("Plant of type %s cannot run inside a loop." % type(plant).__name__)

class _StaticStepper:
    def __init__(self, poly):
        self.step = poly

def simulate_closed_loop(scenario, r, noise = None, index = 0):
    """
    Evaluate the loop sample by sample. Returns (u, y) with y including the output noise of
    realization ``index``. Leading axes of ``r`` are independent loops; for a 2-D ``r``,
    ``index`` may list one realization index per row.
    """
    r     = np.asarray(r, dtype = float)
    noise = noise or NoiseSpec()
    batch = r.shape[:-1]
    n     = r.shape[-1]

    if np.ndim(index):
        v = np.asarray([noise.generate(n, index = m) for m in index]).reshape(r.shape)
    else:
        v = noise.generate(n, index = index, batch = batch)

    controller = scenario.controller.stepper(batch = batch)
    plant      = scenario.plant_stepper(batch = batch)
    gain       = scenario.reference_gain
    bound      = scenario.divergence_bound

    u      = np.zeros(r.shape)
    y      = np.zeros(r.shape)
    y_last = np.zeros(batch)

    for t in range(n):
        u_t = gain * r[..., t] - controller.step(y_last)
        y_t = plant.step(u_t) + v[..., t]

        if not np.all(np.abs(y_t) <= bound):
            raise DivergenceError("Closed loop output exceeded %s at sample %s." % (bound, t))

        u[..., t] = u_t
        y[..., t] = y_t
        y_last    = y_t

    return u, y
