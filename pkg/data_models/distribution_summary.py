"""This class creates the object structure for a score distribution"""

import math


class DistributionSummary:
    """Sample moments of a score sample plus Gaussian-fit parameters

    The gauss_* fields stay None when only moments were computed.
    """

    def __init__(
            self,
            n,
            mean,
            std,
            gauss_mu=None,
            gauss_sigma=None,
            gauss_mu_err=None):
        self.n = n
        self.mean = mean
        self.std = std
        self.stderr = std / math.sqrt(n)
        self.gauss_mu = gauss_mu
        self.gauss_sigma = gauss_sigma
        self.gauss_mu_err = gauss_mu_err

    def has_gaussian_fit(self):
        return self.gauss_mu is not None

    def get_formatted_dict(self):
        return {
            'n': self.n,
            'mean': self.mean,
            'std': self.std,
            'stderr': self.stderr,
            'gauss_mu': self.gauss_mu,
            'gauss_sigma': self.gauss_sigma,
            'gauss_mu_err': self.gauss_mu_err
        }
