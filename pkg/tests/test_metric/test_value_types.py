"""
    This script is for unit testing of the metric value types
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import math

import pytest

from data_models.document import Document
from data_models.embedder_profile import EmbedderProfile, SuitabilityAudit
from data_models.embedding_vector import EmbeddingVector
from data_models.filter_policy import FilterPolicy
from data_models.similarity_score import SimilarityScore
from data_models.sweep_point import SweepPoint
from data_models.token_counter_spec import TokenCounterSpec
from error.noir_error import (IncorrectInputError, PowerOutOfRangeError,
                              ZeroVectorError)


@pytest.mark.parametrize("raw, expected_clamped, floored",
                         [(0.5, 0.5, False),
                          (0.001, 0.01, True),
                          (-0.7, 0.01, True),
                          (1.0, 1.0, False)])
def test_similarity_should_clamp_to_floor(raw, expected_clamped, floored):
    similarity = SimilarityScore(raw, 0.01)

    assert similarity.raw == raw
    assert similarity.clamped == expected_clamped
    assert similarity.is_floored() is floored


@pytest.mark.parametrize("raw", [1.5, -1.01])
def test_similarity_outside_unit_interval_should_raise(raw):
    with pytest.raises(IncorrectInputError):
        SimilarityScore(raw, 0.01)


def test_normalized_vector_should_have_unit_norm():
    vector = EmbeddingVector.normalized([3.0, 4.0])

    assert vector.as_list() == pytest.approx([0.6, 0.8])
    assert vector.norm() == pytest.approx(1.0, abs=1e-6)
    assert vector.dimension == 2


@pytest.mark.parametrize("components", [[0.0, 0.0], [math.nan, 1.0],
                                        [math.inf, 0.0]])
def test_vector_without_direction_should_not_normalize(components):
    with pytest.raises(ZeroVectorError):
        EmbeddingVector.normalized(components)


def test_vector_components_should_be_read_only():
    vector = EmbeddingVector.normalized([1.0, 0.0])

    with pytest.raises(ValueError):
        vector.components[0] = 2.0


def test_document_levels():
    document = Document('doc7', 'text', [(1, 'one'), (2, 'two')])

    assert document.text_at(0) == 'text'
    assert document.text_at(2) == 'two'
    assert document.max_level() == 2
    assert document.embedding_key(1) == 'doc7:1'


@pytest.mark.parametrize("random_mean, expected", [(0.05, 'PASS'),
                                                   (-0.1, 'PASS'),
                                                   (0.35, 'FAIL')])
def test_suitability_verdict(random_mean, expected):
    audit = SuitabilityAudit(100, 0, random_mean, 0.1, 0.2)

    assert audit.verdict == expected


def test_profile_should_reject_zero_dimension():
    with pytest.raises(IncorrectInputError):
        EmbedderProfile('file:x', 0, 512)


def test_bpe_spec_should_need_a_vocabulary():
    with pytest.raises(IncorrectInputError):
        TokenCounterSpec(TokenCounterSpec.BPE)


def test_token_spec_should_reject_unknown_strategy():
    with pytest.raises(IncorrectInputError):
        TokenCounterSpec('words')


def test_equal_token_specs_should_hash_equal():
    assert TokenCounterSpec('bpe', 'merges.txt') == \
        TokenCounterSpec('bpe', 'merges.txt')
    assert len({TokenCounterSpec(), TokenCounterSpec()}) == 1


@pytest.mark.parametrize("threshold", [math.nan, math.inf])
def test_filter_policy_should_reject_threshold(threshold):
    with pytest.raises(IncorrectInputError):
        FilterPolicy(threshold)


def test_filter_policy_should_accept_minus_infinity():
    assert FilterPolicy(-math.inf).threshold == -math.inf


def test_filter_policy_should_reject_negative_max_keep():
    with pytest.raises(IncorrectInputError):
        FilterPolicy(0.0, -1)


def test_sweep_point_should_reject_power_out_of_range():
    with pytest.raises(PowerOutOfRangeError):
        SweepPoint(2.5, 1.0)
