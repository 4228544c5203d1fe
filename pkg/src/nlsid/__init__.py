from __future__ import absolute_import

# imports - module imports
from nlsid.__attr__ import (
    __name__,
    __version__,
    __build__,

    __description__,

    __author__
)
from nlsid.config      import PATH
from nlsid.const       import DEFAULT

from bpyutils.config   import Settings

settings = Settings(location = PATH["CACHE"], defaults = {
    "jobs":                     DEFAULT["jobs"],

    "dip_floor":                DEFAULT["dip_floor"],
    "condition_threshold":      DEFAULT["condition_threshold"],

    "divergence_bound":         DEFAULT["divergence_bound"],
    "oversample_factor":        DEFAULT["oversample_factor"],

    "max_iterations":           DEFAULT["max_iterations"],
    "tolerance":                DEFAULT["tolerance"],

    "snr_warning_db":           DEFAULT["snr_warning_db"],
    "snr_minimum_db":           DEFAULT["snr_minimum_db"],

    "linearity_margin_db":      DEFAULT["linearity_margin_db"]
})

from nlsid.__main__    import main

def get_version_str():
    version = "%s%s" % (__version__, " (%s)" % __build__ if __build__ else "")
    return version
