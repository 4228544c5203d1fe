class NlsidError(Exception):
    category = "nlsid"

class ConfigError(NlsidError):
    category = "config"

class GridError(NlsidError):
    category = "grid"

class SynthesisError(NlsidError):
    category = "synthesis"

class UnstableSystemError(NlsidError):
    category = "unstable"

class DivergenceError(NlsidError):
    category = "divergence"

class RecordFormatError(NlsidError):
    category = "record"

    def __init__(self, message, offset = None):
        self.offset = offset

        if offset is not None:
            message = "%s (at byte offset %s)" % (message, offset)

        super(RecordFormatError, self).__init__(message)

class EstimationError(NlsidError):
    category = "estimation"

class FitError(NlsidError):
    category = "fit"

class RankDeficientError(FitError):
    def __init__(self, directions):
        self.directions = list(directions)

        super(RankDeficientError, self).__init__(
            "Jacobian is rank deficient along parameter directions: %s" % ", ".join(self.directions))

class ReportError(NlsidError):
    category = "report"

class PipelineError(NlsidError):
    category = "pipeline"

    def __init__(self, stage, error, realization = None, level = None):
        self.stage       = stage
        self.realization = realization
        self.level       = level
        self.error       = error

        where = "stage '%s'" % stage

        if level is not None:
            where = "%s, level %s" % (where, level)

        if realization is not None:
            where = "%s, realization %s" % (where, realization)

        super(PipelineError, self).__init__("%s failed: %s" % (where, error))
