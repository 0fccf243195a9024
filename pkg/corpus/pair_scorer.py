''' Scores evaluation pairs with the NOIR metric

Each distinct (document, level) text is counted and embedded once,
whatever the number of pairs it takes part in; the backend receives every
distinct text in a single embed call and may parallelize internally.
'''
import logging

from data_models.document import Document
from data_models.scored_pair import ScoredPair
from embedding.similarity import cosine_similarity
from error.noir_error import NoirError, PairScoringError
from tokencount.token_counter import get_token_counter

LOGGER = logging.getLogger(__name__)


class PairScorer:
    """Scores EvalPairs drawn from a list of documents

    Params:
        * documents : the Documents the pairs refer to
        * counter_spec : TokenCounterSpec for the compression ratio
        * embedder : embedding backend
        * metric : NoirMetric
    """

    def __init__(self, documents, counter_spec, embedder, metric):
        self.documents_by_id = {document.id: document
                                for document in documents}
        self.token_counter = get_token_counter(counter_spec)
        self.embedder = embedder
        self.metric = metric
        self.vectors_by_key = dict()
        self.token_counts_by_key = dict()

    def score_pairs(self, pairs):
        ''' returns one ScoredPair per pair, in input order'''
        self._embed_distinct_texts(pairs)

        scored_pairs = list()
        for pair in pairs:
            try:
                scored_pairs.append(self._score_pair(pair))
            except NoirError as err:
                raise PairScoringError(pair.pair_id(), err)

        LOGGER.debug('Scored %d pairs', len(scored_pairs))
        return scored_pairs

    def _score_pair(self, pair):
        parent_key = self._key(pair.parent_id, pair.parent_level)
        candidate_key = self._key(pair.candidate_id, pair.candidate_level)

        tokens_parent = self.token_counts_by_key[parent_key]
        tokens_candidate = self.token_counts_by_key[candidate_key]
        ratio = self.metric.compression_ratio(tokens_candidate, tokens_parent)
        similarity = cosine_similarity(
            self.vectors_by_key[parent_key],
            self.vectors_by_key[candidate_key],
            self.metric)

        return ScoredPair(
            pair, tokens_parent, tokens_candidate, ratio, similarity,
            self.metric.noir_score(ratio, similarity))

    def _embed_distinct_texts(self, pairs):
        # collect keys in first-appearance order so backend calls are
        # deterministic
        pending_keys = list()
        pending_texts = list()
        seen_keys = set(self.vectors_by_key)
        for pair in pairs:
            for document_id, level in (
                    (pair.parent_id, pair.parent_level),
                    (pair.candidate_id, pair.candidate_level)):
                key = self._key(document_id, level)
                if key in seen_keys:
                    continue
                seen_keys.add(key)
                text = self._resolve_text(pair, document_id, level)
                self.token_counts_by_key[key] = self._count(pair, text)
                pending_keys.append(key)
                pending_texts.append(text)

        if not pending_texts:
            return

        try:
            vectors = self.embedder.embed(pending_texts, pending_keys)
        except NoirError as err:
            raise PairScoringError(
                self._first_pair_using(pairs, err), err)
        self.vectors_by_key.update(zip(pending_keys, vectors))

    def _resolve_text(self, pair, document_id, level):
        document = self.documents_by_id.get(document_id)
        if document is None or level > document.max_level():
            raise PairScoringError(
                pair.pair_id(),
                NoirError('unknown text {}:{}'.format(document_id, level)))
        return document.text_at(level)

    def _count(self, pair, text):
        try:
            return self.token_counter.count(text)
        except NoirError as err:
            raise PairScoringError(pair.pair_id(), err)

    def _first_pair_using(self, pairs, err):
        # UnknownIdError names the missing key; find a pair that needs it
        missing_key = getattr(err, 'key', None)
        for pair in pairs:
            if missing_key in (
                    self._key(pair.parent_id, pair.parent_level),
                    self._key(pair.candidate_id, pair.candidate_level)):
                return pair.pair_id()
        return pairs[0].pair_id()

    def _key(self, document_id, level):
        return Document.key_for(document_id, level)


def score_pairs(pairs, documents, counter_spec, embedder, metric):
    ''' scores pairs drawn from documents, in input order'''
    return PairScorer(documents, counter_spec, embedder, metric) \
        .score_pairs(pairs)
