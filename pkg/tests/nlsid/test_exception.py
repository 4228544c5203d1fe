# imports - module imports
from nlsid.exception import (
    NlsidError,
    ConfigError,
    RecordFormatError,
    RankDeficientError,
    FitError,
    PipelineError
)

# imports - test imports
import pytest

def test_nlsid_error():
    with pytest.raises(NlsidError):
        raise ConfigError

    assert ConfigError.category == "config"

def test_record_format_error():
    error = RecordFormatError("foobar", offset = 12)

    assert error.offset == 12
    assert "byte offset 12" in str(error)

def test_rank_deficient_error():
    error = RankDeficientError(["(+0.707*b1 +0.707*a1)"])

    assert isinstance(error, FitError)
    assert error.category == "fit"
    assert "b1" in str(error)

def test_pipeline_error():
    error = PipelineError("fit", FitError("foobar"), level = 2)

    assert error.stage == "fit"
    assert isinstance(error.error, FitError)
    assert str(error) == "stage 'fit', level 2 failed: foobar"
