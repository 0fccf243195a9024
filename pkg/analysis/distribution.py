''' Distribution summaries of score samples

Sample moments are always reported. summarize_distribution adds a
least-squares fit of a Gaussian density to the normalized histogram;
its fit uncertainty on the mean is reported as gauss_mu_err.
'''
import logging

import numpy as np
import scipy.stats
from scipy.optimize import curve_fit

from data_models.distribution_summary import DistributionSummary
from error.noir_error import DegenerateSampleError, IncorrectInputError

LOGGER = logging.getLogger(__name__)

DEFAULT_BINS = 40
MIN_BINS = 5


def gauss_pdf(x, norm, mu, sigma):
    ''' Gaussian density scaled by norm (1.0 for a normalized histogram)'''
    return norm * scipy.stats.norm.pdf(x, mu, sigma)


def bincenters(bin_edges):
    ''' midpoints of histogram bins'''
    return 0.5 * (bin_edges[1:] + bin_edges[:-1])


def describe_sample(values):
    ''' returns the sample moments of values (std with n - 1)'''
    sample = np.asarray(values, dtype=np.float64)
    if sample.shape[0] < 2:
        raise DegenerateSampleError(
            'Need at least 2 values -> Found {}'.format(sample.shape[0]))
    return DistributionSummary(
        n=sample.shape[0],
        mean=float(np.mean(sample)),
        std=float(np.std(sample, ddof=1)))


def summarize_distribution(values, bins=DEFAULT_BINS):
    '''
        Returns sample moments plus the Gaussian fitted to the histogram
        of values.

        Params:
            * values : at least two reals, not all equal
            * bins : histogram bin count, at least MIN_BINS
    '''
    if bins < MIN_BINS:
        raise IncorrectInputError(
            'Gaussian fit needs at least {} bins'.format(MIN_BINS))

    moments = describe_sample(values)
    if moments.std == 0.0:
        raise DegenerateSampleError(
            'All {} values are equal to {}'.format(moments.n, moments.mean))

    sample = np.asarray(values, dtype=np.float64)
    density, bin_edges = np.histogram(sample, bins=bins, density=True)
    gauss_mu, gauss_sigma, gauss_mu_err = _fit_gaussian(
        bincenters(bin_edges), density, moments)

    return DistributionSummary(
        n=moments.n,
        mean=moments.mean,
        std=moments.std,
        gauss_mu=gauss_mu,
        gauss_sigma=gauss_sigma,
        gauss_mu_err=gauss_mu_err)


def _fit_gaussian(centres, density, moments):
    initial_guess = [1.0, moments.mean, moments.std]
    try:
        fit_params, fit_covariance = curve_fit(
            gauss_pdf, centres, density, p0=initial_guess)
    except RuntimeError as err:
        LOGGER.warning('Gaussian fit did not converge: %s', err)
        return None, None, None

    _, mu, sigma = fit_params
    mu_err = float(np.sqrt(fit_covariance[1][1])) \
        if np.isfinite(fit_covariance[1][1]) else None
    return float(mu), float(abs(sigma)), mu_err


def separation(summary_a, summary_b):
    '''
        Returns (mean_a - mean_b) / sqrt(std_a^2 + std_b^2), the distance
        between two distributions in units of their combined spread.
    '''
    if summary_a.n < 2 or summary_b.n < 2:
        raise DegenerateSampleError('Separation needs n >= 2 on both sides')
    spread = np.sqrt(summary_a.std ** 2 + summary_b.std ** 2)
    if spread == 0.0:
        raise DegenerateSampleError(
            'Both distributions have zero spread')
    return float((summary_a.mean - summary_b.mean) / spread)
