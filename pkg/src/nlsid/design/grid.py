import math
from dataclasses import dataclass, field

import numpy as np

from bpyutils import log

from nlsid.__attr__  import __name__ as NAME
from nlsid.exception import GridError

logger = log.get_logger(name = NAME)

GRID_KINDS  = ("full", "odd", "odd_sparse", "zippered")

EXCITED         = "excited"
ODD_DETECTION   = "odd_detection"
EVEN_DETECTION  = "even_detection"
OUT_OF_BAND     = "out_of_band"

BIN_CLASSES = (EXCITED, ODD_DETECTION, EVEN_DETECTION, OUT_OF_BAND)

def _as_bins(values):
    return np.unique(np.asarray(values if values is not None else [], dtype = np.int64))

@dataclass(frozen = True, eq = False)
class FrequencyGrid:
    """
    Bin layout of one period of a periodic experiment. Bin k sits at k * f0 Hz.
    """
    sample_rate:         float
    n_samples:           int
    excited_bins:        np.ndarray
    detection_bins:      np.ndarray = field(default_factory = lambda: _as_bins(None))
    even_detection_bins: np.ndarray = field(default_factory = lambda: _as_bins(None))
    band_bins:           np.ndarray = field(default_factory = lambda: _as_bins(None))
    kind:                str   = "full"
    f_min:               float = None
    f_max:               float = None
    seed:                int   = None
    group_size:          int   = None
    drops_per_group:     int   = None
    channel_index:       int   = None
    n_channels:          int   = None

    def __post_init__(self):
        for name in ("excited_bins", "detection_bins", "even_detection_bins", "band_bins"):
            object.__setattr__(self, name, _as_bins(getattr(self, name)))

        if not len(self.band_bins):
            object.__setattr__(self, "band_bins", self.excited_bins.copy())

        if np.intersect1d(self.excited_bins, self.detection_bins).size:
            raise GridError("Detection bins overlap the excited bins.")

        if self.excited_bins.size and (self.excited_bins[0] < 1 or self.excited_bins[-1] > self.n_samples // 2 - 1):
            raise GridError("Excited bins must lie in [1, %s]." % (self.n_samples // 2 - 1))

    @property
    def f0(self):
        return self.sample_rate / self.n_samples

    @property
    def n_bins(self):
        return self.n_samples // 2 + 1

    @property
    def n_excited(self):
        return int(self.excited_bins.size)

    def frequencies(self, bins = None):
        bins = np.arange(self.n_bins) if bins is None else np.asarray(bins)
        return bins * self.f0

    def classify(self):
        """
        Class label of every bin 0..N/2, derived from the layout alone.
        """
        classes = np.full(self.n_bins, OUT_OF_BAND, dtype = object)

        detection = self.detection_bins

        classes[self.even_detection_bins]     = EVEN_DETECTION
        classes[detection[detection % 2 == 1]] = ODD_DETECTION
        classes[detection[detection % 2 == 0]] = EVEN_DETECTION
        classes[self.excited_bins]            = EXCITED

        return classes

    def to_dict(self):
        return {
            "sample_rate":          float(self.sample_rate),
            "n_samples":            int(self.n_samples),
            "kind":                 self.kind,
            "f_min":                self.f_min,
            "f_max":                self.f_max,
            "seed":                 self.seed,
            "group_size":           self.group_size,
            "drops_per_group":      self.drops_per_group,
            "channel_index":        self.channel_index,
            "n_channels":           self.n_channels,
            "excited_bins":         self.excited_bins.tolist(),
            "detection_bins":       self.detection_bins.tolist(),
            "even_detection_bins":  self.even_detection_bins.tolist(),
            "band_bins":            self.band_bins.tolist()
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def __eq__(self, other):
        if not isinstance(other, FrequencyGrid):
            return NotImplemented
        return self.to_dict() == other.to_dict()

def _band(sample_rate, n_samples, f_min, f_max):
    if n_samples <= 0 or n_samples % 2:
        raise GridError("n_samples must be a positive even integer, got %s." % n_samples)

    nyquist = sample_rate / 2.0

    if f_max >= nyquist:
        raise GridError("f_max = %s Hz is at or above the Nyquist frequency %s Hz." % (f_max, nyquist))

    if not 0 < f_min < f_max:
        raise GridError("Expected 0 < f_min < f_max, got f_min = %s, f_max = %s." % (f_min, f_max))

    f0    = sample_rate / n_samples
    k_min = max(1, int(math.ceil(f_min / f0 - 1e-9)))
    k_max = min(n_samples // 2 - 1, int(math.floor(f_max / f0 + 1e-9)))

    if k_min > k_max:
        raise GridError("Band [%s, %s] Hz holds no bin of the grid with f0 = %s Hz." % (f_min, f_max, f0))

    return np.arange(k_min, k_max + 1)

def build_grid(sample_rate, n_samples, f_min, f_max, kind = "full", seed = None,
    group_size = None, drops_per_group = 1, channel_index = 0, n_channels = 1):
    """
    Lay out excited and detection bins over [f_min, f_max].

    kind is one of ``full``, ``odd``, ``odd_sparse`` (drop ``drops_per_group`` odd bins
    out of every ``group_size`` consecutive ones, chosen by ``seed``) and ``zippered``
    (channel ``channel_index`` of ``n_channels`` takes every ``n_channels``-th band bin).
    """
    if kind not in GRID_KINDS:
        raise GridError("Unknown grid kind '%s'. Available: %s." % (kind, ", ".join(GRID_KINDS)))

    band      = _band(sample_rate, n_samples, f_min, f_max)
    odd       = band[band % 2 == 1]
    even      = band[band % 2 == 0]

    detection = _as_bins(None)
    even_det  = _as_bins(None)
    params    = dict()

    if kind == "full":
        excited = band
    elif kind == "odd":
        excited  = odd
        even_det = even
    elif kind == "odd_sparse":
        if group_size is None or group_size < 2:
            raise GridError("odd_sparse grids need group_size >= 2, got %s." % group_size)
        if not 1 <= drops_per_group < group_size:
            raise GridError("drops_per_group must lie in [1, %s], got %s." % (group_size - 1, drops_per_group))

        rng      = np.random.default_rng(seed)
        n_groups = odd.size // group_size
        dropped  = [ ]

        for g in range(n_groups):
            group = odd[g * group_size:(g + 1) * group_size]
            picks = rng.choice(group_size, size = drops_per_group, replace = False)
            dropped.extend(group[np.sort(picks)])

        if not n_groups:
            logger.warning("Band holds fewer than %s odd bins, no detection lines were dropped." % group_size)

        detection = _as_bins(dropped)
        excited   = np.setdiff1d(odd, detection)
        even_det  = even
        params    = dict(group_size = group_size, drops_per_group = drops_per_group)
    else:
        if n_channels < 1 or not 0 <= channel_index < n_channels:
            raise GridError("Invalid zippered channel %s of %s." % (channel_index, n_channels))

        excited   = band[channel_index::n_channels]
        detection = np.setdiff1d(band, excited)
        params    = dict(channel_index = channel_index, n_channels = n_channels)

    if not excited.size:
        raise GridError("Band [%s, %s] Hz holds no excited bin for a %s grid." % (f_min, f_max, kind))

    grid = FrequencyGrid(
        sample_rate         = float(sample_rate),
        n_samples           = int(n_samples),
        excited_bins        = excited,
        detection_bins      = detection,
        even_detection_bins = even_det,
        band_bins           = band,
        kind                = kind,
        f_min               = float(f_min),
        f_max               = float(f_max),
        seed                = seed,
        **params
    )

    logger.debug("Built %s grid: f0 = %.6g Hz, %s excited, %s detection bins." % (kind, grid.f0,
        grid.excited_bins.size, grid.detection_bins.size))

    return grid
