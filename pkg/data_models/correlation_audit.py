"""This class creates the object structure for a length-correlation audit"""

import numpy as np


class CorrelationAudit:
    """Per-dimension Pearson correlation of embeddings against length

    Attributes:
        * per_dimension_r : list of r values, one per dimension
        * degenerate_dimensions : dimensions with zero variance, whose r
          is recorded as 0
        * max_abs_r : largest |r|
        * std_of_r : spread of the r values
    """

    def __init__(self, per_dimension_r, degenerate_dimensions=()):
        self.per_dimension_r = list(per_dimension_r)
        self.degenerate_dimensions = list(degenerate_dimensions)
        r_values = np.asarray(self.per_dimension_r, dtype=np.float64)
        self.max_abs_r = float(np.max(np.abs(r_values)))
        self.std_of_r = float(np.std(r_values))

    def strongest_dimension(self):
        """Returns the index of the dimension with the largest |r|"""

        return int(np.argmax(np.abs(self.per_dimension_r)))
