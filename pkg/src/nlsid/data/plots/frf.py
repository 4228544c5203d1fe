import numpy as np

from nlsid.data.plots.util      import figure, save_plot
from nlsid.spectral.distortion  import db

def plot(bundle, target_file, **kwargs):
    fig, (ax,) = figure()

    for level in bundle.levels:
        frf = level.frf
        if frf is None:
            continue

        line, = ax.plot(frf.frequencies, db(np.abs(frf.G) ** 2), label = "rms %g" % level.rms)

        variance = frf.variance
        if variance is not None:
            ax.plot(frf.frequencies, db(variance), linestyle = ":", color = line.get_color())

    ax.set_xlabel("frequency (Hz)")
    ax.set_ylabel("|G| (dB)")
    ax.legend(loc = "upper right", fontsize = "small")

    return save_plot(fig, target_file = target_file, **kwargs)
