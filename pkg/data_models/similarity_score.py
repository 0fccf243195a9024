"""This class creates the object structure for semantic similarity"""

from error.noir_error import IncorrectInputError


class SimilarityScore:
    """Cosine similarity between a parent text and a candidate

    Attributes:
        * raw : cosine similarity in [-1, 1]
        * clamped : raw clipped to [epsilon_d, 1], safe for logarithms
        * epsilon_d : similarity floor used for the clamp
    """

    def __init__(self, raw, epsilon_d):
        if not -1.0 <= raw <= 1.0:
            raise IncorrectInputError(
                'Similarity must lie in [-1, 1] -> Found {}'.format(raw))
        self.raw = raw
        self.epsilon_d = epsilon_d
        self.clamped = min(max(raw, epsilon_d), 1.0)

    def is_floored(self):
        """Returns true if the raw similarity was raised to the floor"""

        return self.raw < self.epsilon_d

    def __repr__(self):
        return 'SimilarityScore(raw={}, clamped={})'.format(
            self.raw, self.clamped)
