"""This script creates object structures describing an embedding backend"""

from error.noir_error import IncorrectInputError


class SuitabilityAudit:
    ''' Outcome of checking an embedder against the 0-to-1 requirement

    Random pairings of unrelated texts must score near 0; paraphrases,
    when supplied, should score near 1.
    '''
    PASS = 'PASS'
    FAIL = 'FAIL'

    def __init__(
            self,
            trials,
            seed,
            random_mean,
            random_std,
            threshold,
            paraphrase_mean=None):
        self.trials = trials
        self.seed = seed
        self.random_mean = random_mean
        self.random_std = random_std
        self.threshold = threshold
        self.paraphrase_mean = paraphrase_mean
        self.verdict = self.PASS if abs(random_mean) < threshold \
            else self.FAIL

    def passed(self):
        return self.verdict == self.PASS


class EmbedderProfile:
    """Identity and limits of an embedding backend"""

    def __init__(self, backend_id, dimension, max_tokens, suitability=None):
        if dimension < 1 or max_tokens < 1:
            raise IncorrectInputError(
                'Embedder dimension and max_tokens must be positive')
        self.backend_id = backend_id
        self.dimension = dimension
        self.max_tokens = max_tokens
        self.suitability = suitability

    def with_suitability(self, suitability):
        """Returns a copy of the profile carrying an audit record"""

        return EmbedderProfile(
            self.backend_id, self.dimension, self.max_tokens, suitability)
