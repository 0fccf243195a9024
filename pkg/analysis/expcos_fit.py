''' Exponential approximation of the random-walk cosine

A chain of random fixed-angle steps in a high-dimensional space leaves a
similarity of cos(sqrt(x)) after x steps. Fitting exp(-beta x) to it over
the range where similarities stay above a floor checks that similarity
degrades approximately multiplicatively.
'''
import numpy as np
from scipy.optimize import curve_fit

from error.noir_error import IncorrectInputError

MIN_GRID_POINTS = 1000


def exponential_decay(x, beta):
    return np.exp(-beta * x)


def expcos_fit(similarity_floor, grid_points=MIN_GRID_POINTS):
    '''
        Least-squares fit of exp(-beta x) to cos(sqrt(x)) on a uniform grid
        over x in [0, arccos(similarity_floor)^2].

        Returns (beta, residual rms).
    '''
    if not 0.0 < similarity_floor < 1.0:
        raise IncorrectInputError(
            'Similarity floor must lie in (0, 1) -> Found {}'
            .format(similarity_floor))
    if grid_points < MIN_GRID_POINTS:
        raise IncorrectInputError(
            'Fit grid needs at least {} points'.format(MIN_GRID_POINTS))

    x = np.linspace(0.0, np.arccos(similarity_floor) ** 2, grid_points)
    cosine = np.cos(np.sqrt(x))
    fit_params, _ = curve_fit(exponential_decay, x, cosine, p0=[0.5])
    beta = float(fit_params[0])
    rms = float(np.sqrt(np.mean((exponential_decay(x, beta) - cosine) ** 2)))
    return beta, rms


def expcos_curves(similarity_floor, beta, points=200):
    ''' returns (x, cos(sqrt(x)), exp(-beta x)) for plotting'''
    x = np.linspace(0.0, np.arccos(similarity_floor) ** 2, points)
    return x, np.cos(np.sqrt(x)), exponential_decay(x, beta)
