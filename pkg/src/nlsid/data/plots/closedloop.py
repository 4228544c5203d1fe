import numpy as np

from nlsid.data.plots.util     import figure, save_plot
from nlsid.spectral.distortion import db

def plot(bundle, target_file, **kwargs):
    fig, (ax,) = figure()

    for level in bundle.levels:
        indirect = level.indirect
        if indirect is None:
            continue

        freqs = indirect.frequencies

        line, = ax.plot(freqs, db(np.abs(indirect.G_bla_r) ** 2), label = "indirect, rms %g" % level.rms)
        ax.plot(freqs, db(np.abs(indirect.G_direct) ** 2), linestyle = "--", color = line.get_color(), label = "direct")
        ax.plot(freqs, db(np.abs(indirect.bias) ** 2), linestyle = ":", color = line.get_color(), label = "bias")

    ax.set_xlabel("frequency (Hz)")
    ax.set_ylabel("(dB)")
    ax.legend(loc = "upper right", fontsize = "small")

    return save_plot(fig, target_file = target_file, **kwargs)
