"""This class creates the object structure for a similarity curve bin"""


class CurvePoint:
    """Mean similarity of the pairs falling in one compression bin"""

    def __init__(self, ratio_bin, n, mean_similarity, stderr,
                 predicted_similarity=None):
        self.ratio_bin = ratio_bin
        self.n = n
        self.mean_similarity = mean_similarity
        self.stderr = stderr
        self.predicted_similarity = predicted_similarity
