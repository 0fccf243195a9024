''' SVG plots of the analysis results

Plots are for humans; the numeric tables written next to them are the
results of record.
'''
import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from analysis.distribution import gauss_pdf  # noqa: E402

# fixed ids and no timestamp so identical runs give identical files
matplotlib.rcParams['svg.hashsalt'] = 'noir'
SVG_METADATA = {'Date': None}


class Plotter:
    """Writes histogram, scatter and curve plots as SVG files"""

    def __init__(self, output_dir):
        self.output_dir = output_dir

    def histogram(self, file_name, samples, title, xlabel,
                  summary=None, bins=40):
        '''
            Params:
                * samples : dict label -> values, overlaid
                * summary : optional DistributionSummary whose Gaussian
                  fit is drawn over the first sample
        '''
        figure, axes = plt.subplots()
        for label, values in samples.items():
            axes.hist(values, bins=bins, density=True, alpha=0.5,
                      label=label)

        if summary is not None and summary.has_gaussian_fit():
            first_values = next(iter(samples.values()))
            x = np.linspace(min(first_values), max(first_values), 200)
            axes.plot(x, gauss_pdf(x, 1.0, summary.gauss_mu,
                                   summary.gauss_sigma),
                      'r-', label='gaussian fit')

        axes.set_title(title)
        axes.set_xlabel(xlabel)
        axes.set_ylabel('density')
        axes.legend()
        return self._save(figure, file_name)

    def scatter(self, file_name, x, y, title, xlabel, ylabel,
                trend=None, binned=None):
        '''
            Params:
                * trend : optional TrendFit drawn as a line
                * binned : optional (x, mean, stderr) lists drawn as
                  error bars
        '''
        figure, axes = plt.subplots()
        axes.scatter(x, y, s=4, alpha=0.4)

        if trend is not None:
            line_x = np.array([min(x), max(x)])
            axes.plot(line_x, trend.intercept + trend.slope * line_x, 'r-',
                      label='slope {:.4g} +- {:.2g}'.format(
                          trend.slope, trend.slope_err))
            axes.legend()
        if binned is not None:
            axes.errorbar(*binned[:2], yerr=binned[2], fmt='ko')

        axes.set_title(title)
        axes.set_xlabel(xlabel)
        axes.set_ylabel(ylabel)
        return self._save(figure, file_name)

    def curves(self, file_name, x, curves_by_label, title, xlabel, ylabel):
        figure, axes = plt.subplots()
        for label, y in curves_by_label.items():
            axes.plot(x, y, label=label)
        axes.set_title(title)
        axes.set_xlabel(xlabel)
        axes.set_ylabel(ylabel)
        axes.legend()
        return self._save(figure, file_name)

    def _save(self, figure, file_name):
        path = self.output_dir.rstrip('/') + '/' + file_name
        figure.savefig(path, format='svg', metadata=SVG_METADATA)
        plt.close(figure)
        return path
