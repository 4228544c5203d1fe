import numpy as np

from nlsid.data.plots.util     import figure, save_plot
from nlsid.spectral.distortion import db

def plot(bundle, target_file, **kwargs):
    fig, (ax, res) = figure(nrows = 2)

    for level in bundle.levels:
        if level.fit is None:
            continue

        frf   = level.frf
        model = level.fit.model
        freqs = frf.frequencies

        line, = ax.plot(freqs, db(np.abs(frf.G) ** 2), ".", label = "measured, rms %g" % level.rms)
        ax.plot(freqs, db(np.abs(model.response(frf.bins, frf.grid.n_samples)) ** 2), color = line.get_color())

        res.plot(frf.grid.frequencies(level.fit.bins), level.fit.residual_over_sigma, ".", color = line.get_color())

    ax.set_ylabel("|G| (dB)")
    ax.legend(loc = "upper right", fontsize = "small")

    res.set_ylabel("|residual| / sigma")
    res.set_xlabel("frequency (Hz)")

    return save_plot(fig, target_file = target_file, **kwargs)
