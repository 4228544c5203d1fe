from nlsid.plant.polynomial         import StaticPolynomial, simulate_static
from nlsid.plant.lti                import LtiFilter, simulate_lti
from nlsid.plant.wiener_hammerstein import WienerHammerstein, simulate_wh
from nlsid.plant.duffing            import DuffingParams, simulate_duffing
from nlsid.plant.mimo               import MimoLti, simulate_mimo
from nlsid.plant.noise              import NoiseSpec, derive_seed
from nlsid.plant.loop               import ClosedLoopScenario, simulate_closed_loop, linear_part
from nlsid.plant.simulate           import simulate
from nlsid.plant.record             import steady_state_record, mimo_records
