import os.path as osp

import matplotlib
matplotlib.use("Agg")

import matplotlib.pyplot as plt

from nlsid.design.grid import EXCITED, ODD_DETECTION, EVEN_DETECTION

# excited black dots, odd red bullets, even blue stars, noise green line
STYLES = {
    EXCITED:        dict(color = "black", marker = ".", linestyle = "none", label = "excited"),
    ODD_DETECTION:  dict(color = "red",   marker = "o", linestyle = "none", label = "odd distortions", markersize = 4),
    EVEN_DETECTION: dict(color = "blue",  marker = "*", linestyle = "none", label = "even distortions")
}
NOISE_STYLE = dict(color = "green", linestyle = "-", label = "noise level")

def figure(nrows = 1):
    fig, axes = plt.subplots(nrows = nrows, ncols = 1, sharex = True, figsize = (8, 3.5 * nrows), squeeze = False)
    return fig, axes[:, 0]

def save_plot(fig, *args, **kwargs):
    target_file = kwargs.pop("target_file")
    suffix      = kwargs.get("suffix", None)

    if suffix:
        dirname     = osp.dirname(target_file)
        basename    = osp.basename(target_file)
        prefix, ext = osp.splitext(basename)

        target_file = osp.join(dirname, "%s-%s%s" % (prefix, suffix, ext))

    with matplotlib.rc_context({"svg.hashsalt": "nlsid"}):
        fig.savefig(target_file, format = "svg", metadata = {"Date": None})

    plt.close(fig)

    return target_file
