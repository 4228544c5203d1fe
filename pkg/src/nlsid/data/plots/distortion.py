from nlsid.data.plots.util import STYLES, NOISE_STYLE, figure, save_plot

def plot(bundle, target_file, **kwargs):
    levels   = [level for level in bundle.levels if level.distortion is not None]
    fig, axs = figure(nrows = len(levels))

    for ax, level in zip(axs, levels):
        report = level.distortion
        freqs  = report.frequencies
        db     = report.level_db

        if report.noise_power is not None:
            ax.plot(freqs[report.grid.band_bins], report.noise_floor_db[report.grid.band_bins], **NOISE_STYLE)

        for class_, style in STYLES.items():
            bins = report.bins_of(class_)
            if bins.size:
                ax.plot(freqs[bins], db[bins], **style)

        ax.set_ylabel("output (dB)")
        ax.set_title("rms %g" % level.rms)

    axs[-1].set_xlabel("frequency (Hz)")
    axs[0].legend(loc = "upper right", fontsize = "small")

    return save_plot(fig, target_file = target_file, **kwargs)
