import os.path as osp

import tqdm as tq

from bpyutils import log
from bpyutils.util.system import makedirs

from nlsid.__attr__     import __name__ as NAME
from nlsid              import settings
from nlsid.bla          import fit_frf
from nlsid.closedloop   import correct_feedback, indirect_frf
from nlsid.data.bundle  import LevelResult, ResultBundle
from nlsid.data.io      import write_bundle, write_record
from nlsid.exception    import EstimationError, NlsidError, PipelineError
from nlsid.plant        import steady_state_record
from nlsid.spectral     import (
    assess_linearity,
    classify_distortions,
    estimate_frf,
    line_statistics,
    period_dfts,
    robust_method
)

logger = log.get_logger(name = NAME)

STAGES = ("design", "simulate", "analyze", "fit", "closedloop")

def _stage(name, fn, *args, level = None, **kwargs):
    try:
        return fn(*args, **kwargs)
    except PipelineError as e:
        if e.level is None:
            raise PipelineError(name, e.error, realization = e.realization, level = level)
        raise
    except NlsidError as e:
        raise PipelineError(name, e, level = level)

def design(config):
    grid        = config.grid()
    excitations = [config.excitation(grid, i) for i in range(len(config.rms_levels))]

    logger.info("Grid %s: %s excited, %s detection lines." % (grid.kind, grid.n_excited,
        grid.detection_bins.size + grid.even_detection_bins.size))

    return grid, excitations

def simulate(config, excitation, level, jobs = 1):
    return steady_state_record(config.scenario(), excitation,
        periods_discard = config.periods_discard,
        periods_keep    = config.periods_keep,
        realizations    = config.realizations,
        noise           = config.noise(level),
        seed            = config.level_seed(level),
        dc_offset       = float(config.data["excitation"].get("dc_offset", 0.0)),
        jobs            = jobs
    )

def analyze(config, record):
    options  = config.analysis
    spectra  = period_dfts(record)
    averages = line_statistics(spectra, scope = "per_realization")

    report   = classify_distortions(averages)
    verdict  = assess_linearity(report, margin_db = options.get("linearity_margin_db"))

    mode     = options["frf_mode"]
    if mode == "robust":
        frf = robust_method(record, dip_floor = options.get("dip_floor"))
    elif mode == "division":
        frf = estimate_frf(averages, mode = mode, dip_floor = options.get("dip_floor"))
    else:
        frf = estimate_frf(spectra, mode = mode, dip_floor = options.get("dip_floor"))

    return report, verdict, frf

def fit(config, frf):
    options = config.analysis["fit"]
    return fit_frf(frf, int(options["n_num"]), int(options["n_den"]),
        max_iterations = options.get("max_iterations"), tolerance = options.get("tolerance"))

def closedloop(config, record):
    if not record.is_closed_loop:
        raise EstimationError("The closed-loop stage needs a record with a reference channel.")

    spectra    = period_dfts(record)
    indirect   = indirect_frf(spectra, floor = config.analysis.get("dip_floor"))
    correction = None

    grid = record.grid
    if grid.detection_bins.size or grid.even_detection_bins.size:
        correction = correct_feedback(line_statistics(spectra, scope = "per_realization", channels = ["u", "y"]))

    return indirect, correction

def run_pipeline(config, stages = None, jobs = None, out_dir = None):
    """
    design -> simulate -> analyze (-> fit -> closedloop) for every RMS level of ``config``.

    ``stages`` limits the run (design and simulate always run). Fit runs when the config
    asks for it, the closed-loop stage when it describes a loop. Every failure is raised as
    a PipelineError naming the stage, the level and, for simulations, the realization.
    """
    jobs   = int(settings.get("jobs")) if jobs is None else int(jobs)
    stages = set(STAGES if stages is None else stages) | {"design", "simulate"}

    grid, excitations = _stage("design", design, config)

    bundle = ResultBundle(config = config, grid = grid)
    levels = list(enumerate(config.rms_levels))

    for i, rms in tq.tqdm(levels, total = len(levels), desc = "Levels", disable = len(levels) < 2):
        logger.info("Level %s: rms %s..." % (i, rms))

        result = LevelResult(index = i, rms = rms, seed = config.level_seed(i))
        result.record = _stage("simulate", simulate, config, excitations[i], i, jobs = jobs, level = i)

        if "analyze" in stages or "fit" in stages or "closedloop" in stages:
            result.distortion, result.verdict, result.frf = _stage("analyze", analyze, config, result.record, level = i)

        if "fit" in stages and config.analysis["fit"] is not None:
            result.fit = _stage("fit", fit, config, result.frf, level = i)

        if "closedloop" in stages and config.has_loop:
            result.indirect, result.correction = _stage("closedloop", closedloop, config, result.record, level = i)

        bundle.levels.append(result)

    if out_dir:
        save(bundle, out_dir)

    return bundle

def save(bundle, out_dir, records = True):
    makedirs(out_dir, exist_ok = True)

    if records:
        for level in bundle.levels:
            if level.record is not None:
                write_record(level.record, osp.join(out_dir, "level-%s.rec" % level.index))

    path = write_bundle(bundle, osp.join(out_dir, "bundle.json"))

    logger.success("Results saved to %s." % out_dir)

    return path
