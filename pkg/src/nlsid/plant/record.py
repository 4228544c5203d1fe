import numpy as np
import tqdm as tq

from bpyutils import parallel, log
from bpyutils.util.types import build_fn

from nlsid.__attr__         import __name__ as NAME
from nlsid.design.multisine import synthesize_multisine
from nlsid.exception        import ConfigError, NlsidError, PipelineError
from nlsid.plant.loop       import ClosedLoopScenario, simulate_closed_loop
from nlsid.plant.mimo       import simulate_mimo
from nlsid.plant.noise      import NoiseSpec, derive_seed
from nlsid.plant.simulate   import simulate
from nlsid.spectral.record  import Record

logger = log.get_logger(name = NAME)

def _excitations(excitation, indices, seed, n_periods, dc_offset):
    grid = excitation.grid
    rows = [ ]

    for m in indices:
        realization = synthesize_multisine(grid, excitation.amplitudes, rms_target = None,
            seed = derive_seed(seed, m))
        rows.append(np.tile(realization.samples, n_periods) + dc_offset)

    return np.asarray(rows)

def _simulate_batch(indices, system = None, excitation = None, seed = 0, n_periods = 1,
    noise = None, dc_offset = 0.0):
    grid   = excitation.grid
    n      = n_periods * grid.n_samples
    source = _excitations(excitation, indices, seed, n_periods, dc_offset)

    if isinstance(system, ClosedLoopScenario):
        u, y = simulate_closed_loop(system, source, noise = noise, index = indices)
        v    = np.asarray([noise.generate(n, index = m) for m in indices])

        return dict(r = source, u = u, y = y, v = v)

    y0 = simulate(system, source, sample_rate = grid.sample_rate)
    v  = np.asarray([noise.generate(n, index = m) for m in indices])

    return dict(u = source, y = y0 + v, v = v)

def _simulate_chunk(indices, **kwargs):
    try:
        return _simulate_batch(indices, **kwargs)
    except NlsidError as e:
        if len(indices) == 1:
            raise PipelineError("simulate", e, realization = int(indices[0]))

        # rerun one by one to attach the failing realization index
        for m in indices:
            _simulate_chunk([m], **kwargs)

        raise

def steady_state_record(system, excitation, periods_discard = 1, periods_keep = 2, realizations = 1,
    noise = None, seed = 0, store_noise = False, dc_offset = 0.0, jobs = 1):
    """
    Simulate ``realizations`` random-phase re-draws of ``excitation`` (same amplitudes, phases
    from ``derive_seed(seed, m)``) for periods_discard + periods_keep periods and keep the
    last ``periods_keep`` periods of every channel.

    Open-loop systems yield channels u, y; a ClosedLoopScenario yields r, u, y. The applied
    output noise is stored as channel v with ``store_noise``.
    """
    if periods_keep < 1 or periods_discard < 0:
        raise ConfigError("Need periods_keep >= 1 and periods_discard >= 0.")

    if realizations < 1:
        raise ConfigError("Need at least one realization, got %s." % realizations)

    grid      = excitation.grid
    N         = grid.n_samples
    n_periods = periods_discard + periods_keep
    noise     = noise or NoiseSpec()
    jobs      = max(1, min(int(jobs), realizations))

    function  = build_fn(_simulate_chunk, system = system, excitation = excitation, seed = seed,
        n_periods = n_periods, noise = noise, dc_offset = dc_offset)
    chunks    = [[int(m) for m in chunk] for chunk in np.array_split(np.arange(realizations), jobs)]

    logger.info("Simulating %s realizations of %s periods (%s discarded) with %s jobs..."
        % (realizations, n_periods, periods_discard, jobs))

    if jobs == 1:
        results = [function(chunk) for chunk in chunks]
    else:
        with parallel.pool(processes = jobs) as pool:
            results = list(tq.tqdm(pool.imap(function, chunks), total = len(chunks), desc = "Simulating"))

    channels = dict()

    for name in results[0]:
        if name == "v" and not store_noise:
            continue

        data = np.concatenate([result[name] for result in results])
        channels[name] = data[:, periods_discard * N:].reshape(realizations, periods_keep, N)

    provenance = dict(seed = int(seed), noise_seed = int(noise.seed),
        realization_seeds = [derive_seed(seed, m) for m in range(realizations)])

    return Record(sample_rate = grid.sample_rate, n_samples = N, n_periods = periods_keep,
        n_realizations = realizations, channels = channels, grid = grid, provenance = provenance)

def mimo_records(plant, inputs, periods_discard = 1, periods_keep = 2, noise = None):
    """
    One record per experiment of an orthogonal multisine set, channels u0.. and y0..
    """
    noise   = noise or NoiseSpec()
    grid    = inputs.base.grid
    N       = grid.n_samples
    total   = periods_discard + periods_keep
    records = [ ]

    for e in range(inputs.n_experiments):
        u = np.tile(inputs.signals[e], (1, total))
        y = simulate_mimo(plant, u)

        for i in range(plant.n_outputs):
            y[i] += noise.generate(total * N, index = e * plant.n_outputs + i)

        channels = dict()
        for j in range(plant.n_inputs):
            channels["u%s" % j] = u[j, periods_discard * N:]
        for i in range(plant.n_outputs):
            channels["y%s" % i] = y[i, periods_discard * N:]

        records.append(Record(sample_rate = grid.sample_rate, n_samples = N, n_periods = periods_keep,
            n_realizations = 1, channels = channels, grid = grid, provenance = dict(experiment = e)))

    return records
