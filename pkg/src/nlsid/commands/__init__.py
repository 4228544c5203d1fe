# imports - compatibility imports
from __future__ import absolute_import

import sys
import os.path as osp
import json

from nlsid.commands.util    import cli_format
from bpyutils.util._dict    import merge_dict
from bpyutils.util.system   import makedirs, write
from bpyutils.util.error    import pretty_print_error
from bpyutils.config        import environment
from bpyutils import log
from nlsid import cli
from bpyutils._compat       import iteritems
from nlsid.__attr__ import __name__ as NAME

from nlsid.cli.parser       import COMMANDS
from nlsid.exception        import ConfigError, NlsidError, PipelineError

logger   = log.get_logger(name = NAME, level = log.DEBUG)

ARGUMENTS = dict(
    command                     = "pipeline",
    config                      = None,
    seed                        = None,
    out_dir                     = "output",
    jobs                        = 1,
    no_color                    = True,
    verbose                     = False
)

EXIT_CONFIG_ERROR = 2
EXIT_ERROR        = 1

def _is_config_error(e):
    return isinstance(e, ConfigError) or (isinstance(e, PipelineError) and isinstance(e.error, ConfigError))

@cli.command
def command(**ARGUMENTS):
    try:
        return _command(**ARGUMENTS)
    except NlsidError as e:
        sys.stderr.write("%s: error: %s: %s\n" % (NAME, e.category, e))
        return EXIT_CONFIG_ERROR if _is_config_error(e) else EXIT_ERROR
    except Exception as e:
        cli.echo()

        pretty_print_error(e)

        cli.echo(cli_format("""\
An error occured while performing the above command. This could be an issue with
"nlsid". Kindly post an issue at https://github.com/nlsid/nlsid/issues""", cli.RED,
            no_color = ARGUMENTS.get("no_color", True)))

        return EXIT_ERROR

def to_params(kwargs):
    class O(object):
        pass

    params = O()

    kwargs = merge_dict(ARGUMENTS, kwargs)

    for k, v in iteritems(kwargs):
        setattr(params, k, v)

    return params

def _write_design(config, out_dir):
    from nlsid.pipelines.run import design

    grid, excitations = design(config)

    grid_file = osp.join(out_dir, "grid.json")
    write(grid_file, json.dumps(grid.to_dict(), sort_keys = True, indent = 2), force = True)

    lines = ["sample,%s" % ",".join("level-%s" % i for i in range(len(excitations)))]
    for t in range(grid.n_samples):
        lines.append("%s,%s" % (t, ",".join(repr(float(e.samples[t])) for e in excitations)))

    excitation_file = osp.join(out_dir, "excitation.csv")
    write(excitation_file, "\n".join(lines) + "\n", force = True)

    return [grid_file, excitation_file]

def _run(config, out_dir, jobs, stages, records = True, reports = False):
    from nlsid.pipelines.run import run_pipeline, save
    from nlsid.data.report   import build_reports
    from nlsid.data.util     import write_summary

    bundle = run_pipeline(config, stages = stages, jobs = jobs)
    files  = [ ]

    if stages != ("simulate",):
        files.append(save(bundle, out_dir, records = records))
    else:
        from nlsid.data.io import write_record

        for level in bundle.levels:
            files.append(write_record(level.record, osp.join(out_dir, "level-%s.rec" % level.index)))

    if reports:
        for outputs in build_reports(bundle, path = out_dir).values():
            files.extend([outputs["table"], outputs["plot"]])

        files.append(write_summary(bundle, osp.join(out_dir, "summary.md")))

    return files

def _command(*args, **kwargs):
    a = to_params(kwargs)

    if not a.verbose:
        logger.setLevel(log.NOTSET)

    logger.info("Environment: %s" % environment())
    logger.info("Arguments Passed: %s" % locals())

    if a.command not in COMMANDS:
        raise ConfigError("Unknown command '%s'. Available: %s." % (a.command, ", ".join(COMMANDS)))

    if not a.config:
        raise ConfigError("No experiment configuration given, use --config PATH or a bundled name.")

    from nlsid.data.config import ExperimentConfig

    config = ExperimentConfig.load(a.config)

    if a.seed is not None:
        config = config.replace(seed = int(a.seed))

    jobs = max(1, int(a.jobs))
    makedirs(a.out_dir, exist_ok = True)

    logger.info("Using %s jobs..." % jobs)

    if a.command == "design":
        files = _write_design(config, a.out_dir)
    elif a.command == "simulate":
        files = _run(config, a.out_dir, jobs, stages = ("simulate",))
    elif a.command == "analyze":
        files = _run(config, a.out_dir, jobs, stages = ("analyze",))
    elif a.command == "fit":
        if config.analysis["fit"] is None:
            raise ConfigError("The configuration has no analysis.fit section.")
        files = _run(config, a.out_dir, jobs, stages = ("analyze", "fit"))
    elif a.command == "closedloop":
        if not config.has_loop:
            raise ConfigError("The configuration has no loop section.")
        files = _run(config, a.out_dir, jobs, stages = ("analyze", "closedloop"))
    elif a.command == "report":
        files = _run(config, a.out_dir, jobs, stages = None, records = False, reports = True)
    else:
        files = _run(config, a.out_dir, jobs, stages = None, reports = True)

    for path in files:
        cli.echo(path)

    return 0
