import os.path as osp
import copy
import glob
import hashlib
import inspect
import json
import numbers

from bpyutils import log
from bpyutils.util.system import read

from nlsid.__attr__    import __name__ as NAME
from nlsid.config      import PATH
from nlsid.design      import build_grid, synthesize_multisine
from nlsid.exception   import ConfigError, NlsidError
from nlsid.plant       import (
    ClosedLoopScenario,
    DuffingParams,
    LtiFilter,
    NoiseSpec,
    StaticPolynomial,
    WienerHammerstein,
    derive_seed
)

logger = log.get_logger(name = NAME)

PLANT_TYPES = ("lti", "polynomial", "wiener_hammerstein", "duffing")
FRF_MODES   = ("robust", "division", "cross_spectral")

DEFAULTS = {
    "name":         "experiment",
    "seed":         1,
    "realizations": 1,
    "periods":      {"discard": 1, "keep": 2},
    "excitation":   {"rms_levels": [1.0], "redistribute": False, "dc_offset": 0.0, "profile": None},
    "noise":        {"std_dev": 0.0, "seed": 0, "shaping": None},
    "loop":         None,
    "analysis":     {"frf_mode": "robust", "dip_floor": None, "fit": None, "linearity_margin_db": None}
}

def _strip_comments(text):
    lines = [line for line in text.splitlines() if not line.lstrip().startswith(("#", "//"))]
    return "\n".join(lines)

def _merge(defaults, data):
    merged = copy.deepcopy(defaults)

    for key, value in data.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value

    return merged

def _normalize(value):
    # numbers compare by value: 1 and 1.0 serialize alike
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, dict):
        return {key: _normalize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_normalize(item) for item in value]
    return value

def _grid_defaults():
    parameters = inspect.signature(build_grid).parameters
    return {name: p.default for name, p in parameters.items() if p.default is not inspect.Parameter.empty}

def _require(data, key, where):
    if key not in data or data[key] is None:
        raise ConfigError("Missing '%s' in %s." % (key, where))
    return data[key]

def _filter(data, where):
    try:
        return LtiFilter.from_dict(data)
    except (NlsidError, KeyError, TypeError, ValueError) as e:
        raise ConfigError("Invalid filter in %s: %s" % (where, e))

def _plant(data):
    kind = _require(data, "type", "plant")

    if kind not in PLANT_TYPES:
        raise ConfigError("Unknown plant type '%s'. Available: %s." % (kind, ", ".join(PLANT_TYPES)))

    if kind == "lti":
        return _filter(data, "plant")

    if kind == "polynomial":
        return StaticPolynomial(coefficients = tuple(_require(data, "coefficients", "plant")),
            constant = float(data.get("constant", 0.0)))

    if kind == "wiener_hammerstein":
        nonlinearity = _require(data, "nonlinearity", "plant")
        return WienerHammerstein(
            front        = _filter(_require(data, "front", "plant"), "plant.front"),
            nonlinearity = StaticPolynomial(coefficients = tuple(_require(nonlinearity, "coefficients", "plant.nonlinearity"))),
            back         = _filter(_require(data, "back", "plant"), "plant.back")
        )

    options = {key: data[key] for key in ("oversample_factor", "divergence_bound") if key in data}

    if "mass" in data:
        return DuffingParams(mass = float(data["mass"]), damping = float(_require(data, "damping", "plant")),
            k_linear = float(_require(data, "k_linear", "plant")), k_cubic = float(data.get("k_cubic", 0.0)), **options)

    return DuffingParams.from_resonance(natural_frequency = data.get("natural_frequency"),
        damping_ratio = data.get("damping_ratio"), k_linear = data.get("k_linear"),
        k_cubic = data.get("k_cubic"), **options)

class ExperimentConfig:
    """
    Validated experiment description: grid, excitation levels, plant, noise, optional loop,
    periods and realizations, seeds and analysis options.
    """
    def __init__(self, data, source = None):
        if not isinstance(data, dict):
            raise ConfigError("Experiment configuration must be a mapping, got %s." % type(data).__name__)

        self.source = source
        self.data   = _merge(DEFAULTS, data)

        self._validate()

    def _validate(self):
        data = self.data

        grid = _require(data, "grid", "config")
        for key in ("sample_rate", "n_samples", "f_min", "f_max"):
            _require(grid, key, "grid")

        _require(data, "plant", "config")

        levels = data["excitation"]["rms_levels"]
        if not isinstance(levels, list) or not levels or not all(isinstance(x, (int, float)) and x > 0 for x in levels):
            raise ConfigError("excitation.rms_levels must be a non-empty list of positive numbers, got %s." % levels)

        if int(data["realizations"]) < 1:
            raise ConfigError("realizations must be >= 1, got %s." % data["realizations"])

        if int(data["periods"]["keep"]) < 1 or int(data["periods"]["discard"]) < 0:
            raise ConfigError("periods.keep must be >= 1 and periods.discard >= 0, got %s." % data["periods"])

        mode = data["analysis"]["frf_mode"]
        if mode not in FRF_MODES:
            raise ConfigError("Unknown analysis.frf_mode '%s'. Available: %s." % (mode, ", ".join(FRF_MODES)))

        fit = data["analysis"]["fit"]
        if fit is not None:
            for key in ("n_num", "n_den"):
                if int(_require(fit, key, "analysis.fit")) < 0:
                    raise ConfigError("analysis.fit.%s must be non-negative." % key)

        # build everything once so that bad references fail before any computation
        try:
            self.grid()
            self.scenario()
            self.noise()
        except ConfigError:
            raise
        except NlsidError as e:
            raise ConfigError("Invalid configuration: %s" % e)

    @property
    def name(self):
        return self.data["name"]

    @property
    def seed(self):
        return int(self.data["seed"])

    @property
    def rms_levels(self):
        return [float(x) for x in self.data["excitation"]["rms_levels"]]

    @property
    def realizations(self):
        return int(self.data["realizations"])

    @property
    def periods_keep(self):
        return int(self.data["periods"]["keep"])

    @property
    def periods_discard(self):
        return int(self.data["periods"]["discard"])

    @property
    def analysis(self):
        return self.data["analysis"]

    @property
    def has_loop(self):
        return self.data["loop"] is not None

    def replace(self, **kwargs):
        data = copy.deepcopy(self.data)
        data.update(kwargs)
        return ExperimentConfig(data, source = self.source)

    def grid(self):
        try:
            return build_grid(**self.data["grid"])
        except TypeError as e:
            raise ConfigError("Invalid grid options: %s" % e)

    def plant(self):
        return _plant(self.data["plant"])

    def scenario(self):
        """
        The system to simulate: the plant itself, or a ClosedLoopScenario around it.
        """
        plant = self.plant()
        loop  = self.data["loop"]

        if loop is None:
            return plant

        return ClosedLoopScenario(plant = plant, controller = _filter(_require(loop, "controller", "loop"), "loop.controller"),
            reference_gain = float(loop.get("reference_gain", 1.0)), sample_rate = float(self.data["grid"]["sample_rate"]))

    def noise(self, level = 0):
        noise   = self.data["noise"]
        shaping = noise.get("shaping")

        return NoiseSpec(std_dev = float(noise.get("std_dev", 0.0)),
            shaping = _filter(shaping, "noise.shaping") if shaping else None,
            seed = derive_seed(int(noise.get("seed", 0)), level))

    def excitation(self, grid, level):
        """
        First realization of the multisine of RMS level ``level`` (index into rms_levels).
        """
        excitation = self.data["excitation"]

        return synthesize_multisine(grid, amplitude_profile = excitation.get("profile"),
            rms_target = self.rms_levels[level], seed = self.level_seed(level),
            redistribute = bool(excitation.get("redistribute", False)))

    def level_seed(self, level):
        return derive_seed(self.seed, level)

    def to_dict(self):
        return copy.deepcopy(self.data)

    def canonical(self):
        """
        Normalized JSON of the merged configuration: grid defaults filled in, every number as
        a float. Semantically equal configurations share it and hence the hash.
        """
        data         = copy.deepcopy(self.data)
        data["grid"] = dict(_grid_defaults(), **data["grid"])

        return json.dumps(_normalize(data), sort_keys = True, separators = (",", ":"))

    @property
    def hash(self):
        return hashlib.sha256(self.canonical().encode("utf-8")).hexdigest()

    @classmethod
    def from_text(cls, text, source = None):
        try:
            data = json.loads(_strip_comments(text))
        except ValueError as e:
            raise ConfigError("Cannot parse configuration %s: %s" % (source or "", e))

        return cls(data, source = source)

    @classmethod
    def load(cls, path_or_name):
        """
        Load a configuration from a file path or a bundled name (``duffing-sweep``).
        """
        path = path_or_name

        if not osp.exists(path):
            bundled = osp.join(PATH["CONFIGS"], "%s.json" % path_or_name)

            if not osp.exists(bundled):
                raise ConfigError("No configuration file or bundled config named '%s'. Bundled: %s."
                    % (path_or_name, ", ".join(bundled_configs())))

            path = bundled

        logger.info("Loading configuration from %s..." % path)

        return cls.from_text(read(path), source = path)

def bundled_configs():
    return sorted(osp.splitext(osp.basename(path))[0] for path in glob.glob(osp.join(PATH["CONFIGS"], "*.json")))
