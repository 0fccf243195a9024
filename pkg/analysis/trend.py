''' Linear trend of a score against a covariate'''

import numpy as np
import scipy.stats

from data_models.trend_fit import TrendFit
from error.noir_error import DegenerateXError, IncorrectInputError

MIN_POINTS = 3


def trend_fit(x, y):
    '''
        Ordinary least squares fit of y against x. slope_err is the
        standard error of the slope under homoskedastic residuals.
    '''
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.shape[0] < MIN_POINTS:
        raise IncorrectInputError(
            'Trend fit needs two equally long lists of at least {} values'
            .format(MIN_POINTS))
    if np.all(x == x[0]):
        raise DegenerateXError()

    result = scipy.stats.linregress(x, y)
    return TrendFit(
        slope=float(result.slope),
        slope_err=float(result.stderr),
        intercept=float(result.intercept))
