from nlsid.spectral.record     import Record
from nlsid.spectral.dft        import SpectralSet, segment_periods, period_dfts
from nlsid.spectral.statistics import LineAverages, line_statistics, SCOPES
from nlsid.spectral.distortion import (
    DistortionReport,
    LinearityVerdict,
    classify_distortions,
    assess_linearity,
    db
)
from nlsid.spectral.frf        import FrfEstimate, estimate_frf, robust_method
from nlsid.spectral.mimo       import MimoFrfEstimate, mimo_frf
from nlsid.spectral.hosidf     import HosidfCurve, hosidf
