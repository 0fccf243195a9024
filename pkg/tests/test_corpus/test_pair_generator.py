"""
    This script is for unit testing of pair_generator
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import pytest

from corpus.pair_generator import null_pairs, true_pairs
from data_models.document import Document
from data_models.eval_pair import EvalPair
from error.noir_error import InsufficientCorpusError


def _documents(count, levels=3):
    return [Document('doc{}'.format(i), 'text {}'.format(i),
                     [(level, 'summary {} {}'.format(i, level))
                      for level in range(1, levels + 1)])
            for i in range(count)]


def test_true_pairs_should_chain_adjacent_levels():
    pairs = true_pairs(_documents(1))

    assert pairs == [EvalPair('doc0', 0, 'doc0', 1),
                     EvalPair('doc0', 1, 'doc0', 2),
                     EvalPair('doc0', 2, 'doc0', 3)]


def test_root_relative_pairs_should_use_the_original():
    pairs = true_pairs(_documents(1), root_relative=True)

    assert [pair.parent_level for pair in pairs] == [0, 0, 0]


@pytest.mark.parametrize("count, levels, expected", [(456, 3, 1368),
                                                     (1, 0, 0)])
def test_true_pair_count(count, levels, expected):
    assert len(true_pairs(_documents(count, levels))) == expected


def test_null_pairs_should_cross_documents():
    pairs = null_pairs(_documents(2), trials=10, seed=0)

    assert len(pairs) == 10
    for pair in pairs:
        assert pair.parent_id != pair.candidate_id
        assert pair.is_null is True
        assert (pair.parent_level, pair.candidate_level) == (0, 1)


def test_null_pairs_should_never_match_own_summary():
    pairs = null_pairs(_documents(456), trials=456, seed=3)

    assert sum(pair.parent_id == pair.candidate_id for pair in pairs) == 0


def test_same_seed_should_give_same_pairs():
    documents = _documents(20)

    assert null_pairs(documents, 50, seed=7) == \
        null_pairs(documents, 50, seed=7)


def test_candidates_should_come_from_summarized_documents():
    documents = _documents(3)
    documents.append(Document('bare', 'no summaries', []))

    pairs = null_pairs(documents, trials=200, seed=1)

    assert 'bare' not in {pair.candidate_id for pair in pairs}
    assert 'bare' in {pair.parent_id for pair in pairs}


def test_single_document_should_raise():
    with pytest.raises(InsufficientCorpusError):
        null_pairs(_documents(1), 5, seed=0)


def test_only_documents_with_a_foreign_summary_should_be_parents():
    documents = [Document('a', 'text a', [(1, 'summary a')]),
                 Document('b', 'text b', [])]

    pairs = null_pairs(documents, 5, seed=0)

    assert {pair.parent_id for pair in pairs} == {'b'}


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_true_and_null_pairs_should_never_overlap(seed):
    documents = _documents(6)

    def endpoints(pairs):
        return {(pair.parent_id, pair.parent_level,
                 pair.candidate_id, pair.candidate_level) for pair in pairs}

    true_endpoints = endpoints(true_pairs(documents) +
                               true_pairs(documents, root_relative=True))
    null_endpoints = endpoints(null_pairs(documents, 100, seed=seed))

    assert true_endpoints.isdisjoint(null_endpoints)
