from nlsid.closedloop.predict    import LoopPrediction, predict_closed_loop_frf
from nlsid.closedloop.correction import (
    CorrectionResult,
    correct_feedback,
    snr_advice,
    SAFE,
    USABLE,
    UNRELIABLE
)
from nlsid.closedloop.indirect   import IndirectEstimate, indirect_frf
