"""
    This script is for unit testing of scored_table
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import io

import pytest

from corpus.pair_generator import true_pairs
from corpus.pair_scorer import score_pairs
from corpus.scored_table import read_scored_table, write_scored_table
from data_models.token_counter_spec import TokenCounterSpec
from error.noir_error import ParseError
from metric.noir_metric import NoirMetric
from tests.unit_test_utils import chain_corpus

__METRIC = NoirMetric()
__HEADER = ('parent_id,candidate_id,level,is_null,tokens_parent,'
            'tokens_candidate,ratio,similarity_raw,similarity_clamped,noir,'
            'saturated')


def _scored_pairs():
    documents, embedder = chain_corpus()
    return score_pairs(true_pairs(documents), documents, TokenCounterSpec(),
                       embedder, __METRIC)


def test_table_should_start_with_stable_header():
    buffer = io.StringIO()
    write_scored_table(_scored_pairs(), buffer)

    lines = buffer.getvalue().split('\n')
    assert lines[0] == __HEADER
    assert lines[1].startswith('doc1,doc1,1,False,100,50,0.5,')


def test_stored_values_should_recompute_noir_bitwise(tmp_path):
    path = str(tmp_path / 'scored.csv')
    write_scored_table(_scored_pairs(), path)

    for stored in read_scored_table(path, __METRIC.epsilon_d):
        recomputed = __METRIC.noir_score(stored.ratio, stored.similarity)
        assert recomputed.value == stored.noir.value


def test_missing_columns_should_raise(tmp_path):
    path = tmp_path / 'broken.csv'
    path.write_text('parent_id,candidate_id\ndoc1,doc1\n')

    with pytest.raises(ParseError):
        read_scored_table(str(path), 0.01)
