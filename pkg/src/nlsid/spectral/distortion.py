from dataclasses import dataclass

import numpy as np

from bpyutils import log

from nlsid.__attr__    import __name__ as NAME
from nlsid             import settings
from nlsid.design.grid import BIN_CLASSES, EXCITED, ODD_DETECTION, EVEN_DETECTION

logger = log.get_logger(name = NAME)

_TINY = 1e-300

def db(power):
    return 10.0 * np.log10(np.maximum(power, _TINY))

@dataclass(eq = False)
class DistortionReport:
    """
    Per-bin class, output level and noise floor (dB re 1, power of the period-averaged
    output spectrum averaged over realizations).
    """
    grid:           object
    classes:        np.ndarray
    output_power:   np.ndarray
    noise_power:    np.ndarray = None

    @property
    def level_db(self):
        return db(self.output_power)

    @property
    def noise_floor_db(self):
        return None if self.noise_power is None else db(self.noise_power)

    @property
    def frequencies(self):
        return self.grid.frequencies()

    def bins_of(self, class_):
        return np.flatnonzero(self.classes == class_)

    def class_level(self, class_):
        """
        Mean power over the bins of a class in dB, ``None`` for an empty class.
        """
        bins = self.bins_of(class_)
        return float(db(np.mean(self.output_power[bins]))) if bins.size else None

    def class_noise(self, class_):
        bins = self.bins_of(class_)
        if self.noise_power is None or not bins.size:
            return None
        return float(db(np.mean(self.noise_power[bins])))

    def aggregates(self):
        return {class_: dict(level = self.class_level(class_), noise = self.class_noise(class_))
            for class_ in BIN_CLASSES}

    def relative_levels(self):
        """
        Per-bin level relative to the strongest excited line, in dB.
        """
        reference = np.max(self.output_power[self.bins_of(EXCITED)])
        return db(self.output_power) - db(reference)

def classify_distortions(averages, grid = None, output = "y"):
    grid    = grid or averages.grid
    classes = grid.classify()

    mean    = averages.mean[output]
    power   = np.mean(mean.real ** 2 + mean.imag ** 2, axis = 0)
    noise   = None

    var     = averages.var_of_mean(output)
    if var is not None:
        noise = np.mean(var, axis = 0)

    return DistortionReport(grid = grid, classes = classes, output_power = power, noise_power = noise)

@dataclass(frozen = True)
class LinearityVerdict:
    verdict:       str
    output_db:     float
    distortion_db: float
    noise_db:      float
    margin_db:     float

def assess_linearity(report, margin_db = None):
    """
    Decide whether a linear model is good enough: ``linear`` when the distortions sit at
    least ``margin_db`` below the output at the excited lines, ``noise_limited`` when the
    detection lines do not rise above the noise floor, ``nonlinear`` otherwise.
    """
    margin_db  = float(settings.get("linearity_margin_db")) if margin_db is None else margin_db

    output     = report.class_level(EXCITED)
    detection  = np.concatenate([report.bins_of(ODD_DETECTION), report.bins_of(EVEN_DETECTION)])

    if not detection.size:
        logger.warning("Grid has no detection lines; linearity cannot be assessed.")
        return LinearityVerdict(verdict = "unknown", output_db = output, distortion_db = None,
            noise_db = None, margin_db = margin_db)

    distortion = float(db(np.mean(report.output_power[detection])))
    noise      = None if report.noise_power is None else float(db(np.mean(report.noise_power[detection])))

    if noise is not None and distortion <= noise + 3.0:
        verdict = "noise_limited" if output - noise < margin_db else "linear"
    elif output - distortion >= margin_db:
        verdict = "linear"
    else:
        verdict = "nonlinear"

    return LinearityVerdict(verdict = verdict, output_db = output, distortion_db = distortion,
        noise_db = noise, margin_db = margin_db)
