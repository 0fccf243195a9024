"""This class creates the object structure for an embedding vector"""

import numpy as np

from error.noir_error import ZeroVectorError


class EmbeddingVector:
    """Unit-normalized semantic vector

    The components are stored as a read-only numpy array so a vector can be
    shared between threads once produced.

    Attributes:
        * components : numpy array of shape (dimension,)
        * dimension : length of the vector
        * truncated : True if the source text was cut at the backend's
          token limit before embedding
    """

    def __init__(self, components, truncated=False):
        components = np.array(components, dtype=np.float64)
        components.setflags(write=False)
        self.components = components
        self.dimension = components.shape[0]
        self.truncated = truncated

    @classmethod
    def normalized(cls, components, truncated=False):
        """Builds a vector from raw components scaled to unit norm"""

        components = np.asarray(components, dtype=np.float64)
        norm = np.linalg.norm(components)
        if norm == 0.0 or not np.isfinite(norm):
            raise ZeroVectorError()
        return cls(components / norm, truncated)

    def norm(self):
        """Returns the euclidean norm of the vector"""

        return float(np.linalg.norm(self.components))

    def as_list(self):
        return self.components.tolist()
