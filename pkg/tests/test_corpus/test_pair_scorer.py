"""
    This script is for unit testing of pair_scorer
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import math
import time
from unittest.mock import patch

import numpy as np
import pytest

from corpus.pair_generator import null_pairs, true_pairs
from corpus.pair_scorer import PairScorer, score_pairs
from data_models.document import Document
from data_models.eval_pair import EvalPair
from data_models.token_counter_spec import TokenCounterSpec
from embedding.precomputed_embedder import PrecomputedEmbedder
from error.noir_error import PairScoringError, UnknownIdError
from metric.noir_metric import NoirMetric
from tests.unit_test_utils import chain_corpus, words

__METRIC = NoirMetric()
__WHITESPACE = TokenCounterSpec()


def test_true_pairs_should_score_hand_computed_values():
    documents, embedder = chain_corpus()

    scored_pairs = score_pairs(true_pairs(documents), documents,
                               __WHITESPACE, embedder, __METRIC)

    assert [pair.ratio.value for pair in scored_pairs] == [0.5, 0.5, 0.5]
    assert [pair.similarity.raw for pair in scored_pairs] == \
        [pytest.approx(0.6), pytest.approx(0.8), pytest.approx(0.6)]
    assert scored_pairs[0].noir.value == pytest.approx(1.357, abs=1e-3)
    assert scored_pairs[1].noir.value == pytest.approx(
        math.log(0.5) / math.log(0.8))
    assert scored_pairs[0].tokens_parent == 100
    assert scored_pairs[0].tokens_candidate == 50


def test_each_text_should_be_embedded_once_in_one_call():
    documents, embedder = chain_corpus()
    pairs = true_pairs(documents) + true_pairs(documents, True)

    with patch.object(embedder, '_embed_raw',
                      wraps=embedder._embed_raw) as mock_embed:
        score_pairs(pairs, documents, __WHITESPACE, embedder, __METRIC)

    assert mock_embed.call_count == 1
    assert mock_embed.call_args[0][1] == \
        ['doc1:0', 'doc1:1', 'doc1:2', 'doc2:0', 'doc2:1']


def test_text_paired_with_itself_should_score_zero():
    documents = [Document('same', words(30), [])]
    embedder = PrecomputedEmbedder({'same:0': [0.2, 0.9]})

    scored_pair = score_pairs([EvalPair('same', 0, 'same', 0)], documents,
                              __WHITESPACE, embedder, __METRIC)[0]

    assert scored_pair.noir.value == 0.0
    assert scored_pair.noir.saturated is False


def test_orthogonal_null_pair_should_clamp_to_floor():
    documents, embedder = chain_corpus()
    pair = EvalPair('doc1', 0, 'doc2', 0, is_null=True)

    scored_pair = score_pairs([pair], documents, __WHITESPACE, embedder,
                              __METRIC)[0]

    assert scored_pair.similarity.clamped == 0.01
    assert scored_pair.noir.value == pytest.approx(
        math.log(0.4) / math.log(0.01))
    assert 0.0 < scored_pair.noir.value < 1.0


def test_null_pairs_should_score_as_null():
    documents, embedder = chain_corpus()

    scored_pairs = score_pairs(null_pairs(documents, 20, seed=0), documents,
                               __WHITESPACE, embedder, __METRIC)

    assert all(pair.pair.is_null for pair in scored_pairs)
    assert len(scored_pairs) == 20


def test_missing_vector_should_name_the_pair():
    documents, _ = chain_corpus()
    embedder = PrecomputedEmbedder({'doc1:0': [1.0, 0.0]})

    with pytest.raises(PairScoringError) as err:
        PairScorer(documents, __WHITESPACE, embedder, __METRIC) \
            .score_pairs(true_pairs(documents))

    assert err.value.pair_id == 'doc1:0->doc1:1'
    assert isinstance(err.value.cause, UnknownIdError)


def test_unknown_level_should_raise():
    documents, embedder = chain_corpus()

    with pytest.raises(PairScoringError):
        score_pairs([EvalPair('doc2', 0, 'doc2', 4)], documents,
                    __WHITESPACE, embedder, __METRIC)


def test_reordered_pairs_should_score_identically():
    documents, embedder = chain_corpus()
    pairs = (true_pairs(documents) + true_pairs(documents, True) +
             null_pairs(documents, 20, seed=0))
    order = np.random.default_rng(5).permutation(len(pairs))

    scored_pairs = score_pairs(pairs, documents, __WHITESPACE, embedder,
                               __METRIC)
    reordered = score_pairs([pairs[i] for i in order], documents,
                            __WHITESPACE, embedder, __METRIC)

    for position, i in enumerate(order):
        assert reordered[position].pair == pairs[i]
        assert reordered[position].noir.value == scored_pairs[i].noir.value
        assert reordered[position].ratio.value == scored_pairs[i].ratio.value


def test_ten_thousand_embedded_pairs_should_score_within_a_second():
    rng = np.random.default_rng(8)
    documents = [Document('doc{}'.format(i), words(60),
                          [(1, words(30)), (2, words(12))])
                 for i in range(5000)]
    embedder = PrecomputedEmbedder(
        {'doc{}:{}'.format(i, level): rng.normal(size=16)
         for i in range(5000) for level in range(3)})
    pairs = true_pairs(documents)

    start = time.perf_counter()
    scored_pairs = score_pairs(pairs, documents, __WHITESPACE, embedder,
                               __METRIC)
    elapsed = time.perf_counter() - start

    assert len(scored_pairs) == 10000
    assert elapsed < 1.0
