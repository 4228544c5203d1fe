from nlsid.design.grid       import (
    FrequencyGrid,
    build_grid,
    GRID_KINDS,
    BIN_CLASSES,
    EXCITED,
    ODD_DETECTION,
    EVEN_DETECTION,
    OUT_OF_BAND
)
from nlsid.design.multisine  import (
    MultisineRealization,
    synthesize_multisine,
    sine_excitation,
    line_amplitudes
)
from nlsid.design.riemann    import BandPower, flat_psd, verify_riemann_band_power
from nlsid.design.orthogonal import OrthogonalMultisineSet, orthogonal_multisines
from nlsid.design.advice     import ExperimentAdvice, advise_experiment, advise_grid_kind
