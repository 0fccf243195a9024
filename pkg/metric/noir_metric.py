''' NOIR metric

Arithmetic of the NOrmed Index of Retention:

    M = ln(T_summary / T_text) / ln(D)

where D is the cosine similarity of the summary to its parent text, and
its powered generalization

    M_p = sign(-ln ratio) * |ln ratio|^p / |ln D|

which equals M exactly at p = 1. Everything here is pure arithmetic and
safe to call from any thread.
'''
import math

from data_models.compression_ratio import CompressionRatio
from data_models.noir_score import NoirScore
from data_models.similarity_score import SimilarityScore
from error.noir_error import (NonPositiveScoreError, PowerOutOfRangeError,
                              ZeroTokensError)

DEFAULT_EPSILON_D = 0.01
DEFAULT_M_CAP = 1000.0
# similarities this close to 1 leave ln(D) too close to 0 to divide by
SATURATION_TOLERANCE = 1e-6
MIN_POWER = 0.0
MAX_POWER = 2.0


class NoirMetric:
    """Computes NOIR values under a similarity floor and a saturation cap

    Params:
        * epsilon_d : floor applied to similarities before taking logs
        * m_cap : magnitude cap for saturated scores
    """

    def __init__(self, epsilon_d=DEFAULT_EPSILON_D, m_cap=DEFAULT_M_CAP):
        self.epsilon_d = epsilon_d
        self.m_cap = m_cap

    def compression_ratio(self, tokens_summary, tokens_text):
        ''' returns the ratio of summary tokens to text tokens'''
        if tokens_summary < 1 or tokens_text < 1:
            raise ZeroTokensError(tokens_summary, tokens_text)
        return CompressionRatio(tokens_summary, tokens_text)

    def similarity(self, raw):
        ''' wraps a raw cosine similarity with this metric's floor'''
        return SimilarityScore(raw, self.epsilon_d)

    def noir_score(self, ratio, similarity):
        '''
            Computes ln(ratio) / ln(D)

            A ratio of exactly 1 gives 0 whatever D is. Similarities within
            SATURATION_TOLERANCE of 1 give +-m_cap with the saturated flag.
        '''
        floored = similarity.is_floored()
        if ratio.value == 1.0:
            return NoirScore(0.0, 1.0, floored)

        log_ratio = math.log(ratio.value)
        if similarity.raw >= 1.0 - SATURATION_TOLERANCE:
            return NoirScore(
                math.copysign(self.m_cap, -log_ratio), 1.0, True)

        value = log_ratio / math.log(similarity.clamped)
        return self._capped(value, 1.0, floored)

    def noir_score_powered(self, ratio, similarity, p):
        '''
            Computes sign(-ln ratio) * |ln ratio|^p / |ln D|

            At p = 0 the numerator magnitude is 1, leaving 1/|ln D|, a
            monotone transform of the similarity alone.
        '''
        if not MIN_POWER <= p <= MAX_POWER:
            raise PowerOutOfRangeError(p)
        if p == 1.0:
            return self.noir_score(ratio, similarity)

        floored = similarity.is_floored()
        if ratio.value == 1.0:
            return NoirScore(0.0, p, floored)

        log_ratio = math.log(ratio.value)
        sign = math.copysign(1.0, -log_ratio)
        if similarity.raw >= 1.0 - SATURATION_TOLERANCE:
            return NoirScore(sign * self.m_cap, p, True)

        value = sign * abs(log_ratio) ** p \
            / abs(math.log(similarity.clamped))
        return self._capped(value, p, floored)

    def degradation_per_halving(self, noir):
        '''
            Returns the similarity retained per 2x compression implied
            by a NOIR value: exp(-ln 2 / M)
        '''
        if noir.value <= 0:
            raise NonPositiveScoreError(noir.value)
        return self.similarity(math.exp(-math.log(2.0) / noir.value))

    def _capped(self, value, p, saturated):
        if abs(value) > self.m_cap:
            return NoirScore(math.copysign(self.m_cap, value), p, True)
        return NoirScore(value, p, saturated)
