''' Scoring and threshold filtering of candidate summaries

Candidate summaries produced by any generator are scored against their
source text; a filter keeps those whose NOIR reaches a threshold, best
first. The service holds only immutable configuration and the embedding
backend, so one instance can serve concurrent requests.
'''
import logging
import numbers

from data_models.filter_policy import FilterPolicy
from embedding.similarity import cosine_similarity
from error.noir_error import IncorrectInputError
from tokencount.token_counter import get_token_counter
from utils.text_utils import clean_text

LOGGER = logging.getLogger(__name__)


class ScoringService:
    """Scores (text, candidate) pairs and filters candidate pools

    Params:
        * embedder : embedding backend shared by all requests
        * counter_spec : TokenCounterSpec
        * metric : NoirMetric
        * default_policy : FilterPolicy used when a request gives none
    """

    def __init__(self, embedder, counter_spec, metric, default_policy=None):
        self.embedder = embedder
        self.token_counter = get_token_counter(counter_spec)
        self.metric = metric
        self.default_policy = default_policy or FilterPolicy(0.0)

    def handle_score(self, text, candidate):
        ''' returns the score payload of one candidate'''
        text = self._cleaned(text, 'text')
        candidate = self._cleaned(candidate, 'candidate')
        text_vector, candidate_vector = self.embedder.embed([text, candidate])
        return self._score_payload(
            text, candidate, text_vector, candidate_vector)

    def handle_filter(self, text, candidates, threshold=None, max_keep=None):
        '''
            Returns {"kept": [...]} with the candidates scoring at least the
            threshold, sorted by NOIR descending (ties keep input order)
            and cut to max_keep.
        '''
        if not candidates:
            raise IncorrectInputError('At least one candidate is required')
        policy = FilterPolicy(
            self.default_policy.threshold if threshold is None
            else _threshold_value(threshold),
            self.default_policy.max_keep if max_keep is None
            else _max_keep_value(max_keep))

        text = self._cleaned(text, 'text')
        candidates = [self._cleaned(candidate, 'candidates[{}]'.format(i))
                      for i, candidate in enumerate(candidates)]
        vectors = self.embedder.embed([text] + candidates)

        scored = list()
        for index, candidate in enumerate(candidates):
            payload = self._score_payload(
                text, candidate, vectors[0], vectors[index + 1])
            if payload['noir'] >= policy.threshold:
                scored.append({
                    'index': index,
                    'candidate': candidate,
                    'noir': payload['noir'],
                    'similarity': payload['similarity']
                })

        # sorted is stable, so equal scores keep their input order
        kept = sorted(scored, key=lambda entry: -entry['noir'])
        if policy.max_keep is not None:
            kept = kept[:policy.max_keep]
        LOGGER.debug('Kept %d of %d candidates', len(kept), len(candidates))
        return {'kept': kept}

    def health(self):
        return {'status': 'ok', 'embedder': self.embedder.backend_id}

    def _score_payload(self, text, candidate, text_vector, candidate_vector):
        tokens_text = self.token_counter.count(text)
        tokens_candidate = self.token_counter.count(candidate)
        ratio = self.metric.compression_ratio(tokens_candidate, tokens_text)
        similarity = cosine_similarity(
            text_vector, candidate_vector, self.metric)
        noir = self.metric.noir_score(ratio, similarity)
        return {
            'tokens_text': tokens_text,
            'tokens_candidate': tokens_candidate,
            'ratio': ratio.value,
            'similarity': similarity.raw,
            'similarity_clamped': similarity.clamped,
            'noir': noir.value,
            'saturated': noir.saturated
        }

    def _cleaned(self, value, field_name):
        if not isinstance(value, str) or not value.strip():
            raise IncorrectInputError(
                'Field "{}" must be a non-empty string'.format(field_name))
        return clean_text(value)


def _threshold_value(threshold):
    if isinstance(threshold, bool) \
            or not isinstance(threshold, numbers.Real):
        raise IncorrectInputError(
            'threshold must be a number -> Found {!r}'.format(threshold))
    return float(threshold)


def _max_keep_value(max_keep):
    if isinstance(max_keep, bool) \
            or not isinstance(max_keep, numbers.Integral):
        raise IncorrectInputError(
            'max_keep must be an integer -> Found {!r}'.format(max_keep))
    return int(max_keep)
