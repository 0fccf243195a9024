''' Embedder suitability audit

An embedder is suitable for NOIR when identical meanings score near 1 and
unrelated texts score near 0. The audit draws random pairs of distinct
texts and checks the mean similarity stays below a threshold (random
pairings reach similarities around 0.2 with a good embedder).
'''
import logging

import numpy as np

from data_models.embedder_profile import SuitabilityAudit
from embedding.similarity import paired_dot_products
from error.noir_error import IncorrectInputError, InsufficientCorpusError

LOGGER = logging.getLogger(__name__)


class SuitabilityAuditor:
    """Audits an embedding backend on random text pairings"""

    MIN_TEXTS = 20
    MIN_TRIALS = 100
    DEFAULT_THRESHOLD = 0.2

    def __init__(self, embedder, threshold=DEFAULT_THRESHOLD):
        self.embedder = embedder
        self.threshold = threshold
        self.random_similarities = None

    def audit_suitability(self, texts, trials, seed, ids=None,
                          paraphrase_pairs=None, paraphrase_ids=None):
        '''
            Returns the embedder's profile with a SuitabilityAudit.

            Params:
                * texts : at least MIN_TEXTS texts to pair at random
                * trials : number of random non-matching pairs
                * seed : seed of the pair sampler
                * ids : optional lookup ids parallel to texts
                * paraphrase_pairs : optional (text, paraphrase) tuples
                  whose mean similarity is recorded as well
                * paraphrase_ids : optional lookup id tuples parallel to
                  paraphrase_pairs
        '''
        if len(texts) < self.MIN_TEXTS:
            raise InsufficientCorpusError(
                'Suitability audit needs at least {} texts -> Found {}'
                .format(self.MIN_TEXTS, len(texts)))
        if trials < self.MIN_TRIALS:
            raise IncorrectInputError(
                'Suitability audit needs at least {} trials'
                .format(self.MIN_TRIALS))

        vectors = self.embedder.embed(texts, ids)
        first, second = self._sample_pairs(len(texts), trials, seed)
        self.random_similarities = paired_dot_products(
            [vectors[i] for i in first], [vectors[j] for j in second])

        audit = SuitabilityAudit(
            trials=trials,
            seed=seed,
            random_mean=float(np.mean(self.random_similarities)),
            random_std=float(np.std(self.random_similarities, ddof=1)),
            threshold=self.threshold,
            paraphrase_mean=self._paraphrase_mean(
                paraphrase_pairs, paraphrase_ids))

        if not audit.passed():
            LOGGER.warning(
                'Embedder %s failed the suitability audit: random-pair '
                'mean similarity %.3f', self.embedder.backend_id,
                audit.random_mean)
        return self.embedder.profile.with_suitability(audit)

    def _sample_pairs(self, text_count, trials, seed):
        # j is drawn from the other text_count - 1 texts, so i != j always
        random_generator = np.random.default_rng(seed)
        first = random_generator.integers(0, text_count, size=trials)
        second = random_generator.integers(0, text_count - 1, size=trials)
        second = second + (second >= first)
        return first, second

    def _paraphrase_mean(self, paraphrase_pairs, paraphrase_ids):
        if not paraphrase_pairs:
            return None
        original_ids, rewording_ids = None, None
        if paraphrase_ids:
            original_ids = [ids[0] for ids in paraphrase_ids]
            rewording_ids = [ids[1] for ids in paraphrase_ids]
        originals = self.embedder.embed(
            [original for original, _ in paraphrase_pairs], original_ids)
        paraphrases = self.embedder.embed(
            [paraphrase for _, paraphrase in paraphrase_pairs], rewording_ids)
        return float(np.mean(paired_dot_products(originals, paraphrases)))
