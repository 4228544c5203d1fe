from bpyutils.util.environ import getenv

from nlsid.__attr__ import __name__ as NAME

_PREFIX = NAME.upper()

CONST = {
    "prefix":               _PREFIX,

    "record_magic":         "NLSID-RECORD",
    "record_version":       1,

    "bundle_version":       1,

    "report_kinds":         ("distortion", "frf", "fit", "closedloop"),

    # hardening Duffing with a ~65 Hz resonance on a 1220 Hz grid; k_cubic puts the odd
    # distortions near -10 dB at an input RMS of 0.3, periodic response up to there
    "duffing": {
        "natural_frequency":    65.0,
        "damping_ratio":        0.05,
        "k_linear":             1.0,
        "k_cubic":              0.1
    }
}

DEFAULT = {
    "jobs":                     getenv("JOBS", 1, prefix = _PREFIX),

    "dip_floor":                1e-12,
    "condition_threshold":      1e3,

    "divergence_bound":         1e6,
    "oversample_factor":        8,

    "max_iterations":           100,
    "tolerance":                1e-10,

    "snr_warning_db":           20.0,
    "snr_minimum_db":           10.0,

    "linearity_margin_db":      30.0
}
