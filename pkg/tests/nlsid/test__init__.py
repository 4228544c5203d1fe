def test_imports():
    from nlsid import (
        __name__    as _,
        __version__ as _,
        __author__  as _,
        settings    as _,
        main        as _
    )

def test_get_version_str():
    from nlsid import __version__, get_version_str

    assert get_version_str().startswith(__version__)

def test_settings_defaults():
    from nlsid       import settings
    from nlsid.const import DEFAULT

    for key in ("dip_floor", "oversample_factor", "max_iterations", "snr_minimum_db", "linearity_margin_db"):
        assert float(settings.get(key)) == DEFAULT[key]

def test_settings_honoured(monkeypatch):
    from nlsid            import settings
    from nlsid.const      import DEFAULT
    from nlsid.plant      import DuffingParams, ClosedLoopScenario, LtiFilter
    from nlsid.closedloop import snr_advice

    overrides = dict(oversample_factor = 12, divergence_bound = 5.0, snr_warning_db = 40.0)
    monkeypatch.setattr(settings, "get", lambda key, *args, **kwargs: overrides.get(key, DEFAULT.get(key)))

    params = DuffingParams.from_resonance()
    assert params.oversample_factor == 12
    assert params.divergence_bound  == 5.0

    # explicit arguments win over the settings
    assert DuffingParams.from_resonance(oversample_factor = 4).oversample_factor == 4

    scenario = ClosedLoopScenario(plant = LtiFilter(numerator = (0.5,)), controller = LtiFilter(numerator = (0.2,)))
    assert scenario.divergence_bound == 5.0

    assert snr_advice(30.0) == "usable"
