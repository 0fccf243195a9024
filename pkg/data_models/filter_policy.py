"""This class creates the object structure for a summary filter policy"""

import math

from error.noir_error import IncorrectInputError


class FilterPolicy:
    """Keep candidates scoring at least threshold, at most max_keep of them

    A threshold of -inf keeps every candidate.
    """

    def __init__(self, threshold, max_keep=None):
        if math.isnan(threshold) or threshold == math.inf:
            raise IncorrectInputError(
                'Filter threshold must be finite -> Found {}'
                .format(threshold))
        if max_keep is not None and max_keep < 0:
            raise IncorrectInputError('max_keep must not be negative')
        self.threshold = threshold
        self.max_keep = max_keep
