"""
    This script is for unit testing of ratio_bins and percentile_bundle
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import math

import pytest

from analysis.percentile_bundle import (HUMAN_EVALUATION_PERCENTILES,
                                        nearest_rank_percentile,
                                        percentile_bundle)
from analysis.ratio_bins import (HUMAN_EVALUATION_BINS, assign_to_bins,
                                 parse_bins)
from data_models.compression_ratio import CompressionRatio
from data_models.eval_pair import EvalPair
from data_models.noir_score import NoirScore
from data_models.scored_pair import ScoredPair
from data_models.similarity_score import SimilarityScore
from error.noir_error import EmptyBinError, IncorrectInputError


def _pair(parent_id, noir, tokens_candidate=25):
    return ScoredPair(
        EvalPair(parent_id, 0, parent_id, 1), 100, tokens_candidate,
        CompressionRatio(tokens_candidate, 100), SimilarityScore(0.5, 0.01),
        NoirScore(noir))


def _spread_pairs():
    # at least five pairs in each of the human evaluation bins
    pairs = list()
    for tokens in range(20, 80, 2):
        pairs.append(_pair('d{}'.format(tokens), tokens / 10.0, tokens))
    pairs.append(_pair('top', 9.0, 80))
    return pairs


def test_parse_bins():
    assert parse_bins('0.2:0.3,0.3:0.45') == [(0.2, 0.3), (0.3, 0.45)]


@pytest.mark.parametrize("bins_string", ['0.3:0.2', '0.2-0.3', 'a:b'])
def test_parse_bad_bins_should_raise(bins_string):
    with pytest.raises(IncorrectInputError):
        parse_bins(bins_string)


def test_bins_should_be_half_open_except_the_last():
    pairs = [_pair('low', 1.0, 20), _pair('edge', 1.0, 30),
             _pair('last', 1.0, 80), _pair('out', 1.0, 81)]

    binned = assign_to_bins(pairs, HUMAN_EVALUATION_BINS)

    assert [pair.pair.parent_id for pair in binned[0]] == ['low']
    assert [pair.pair.parent_id for pair in binned[1]] == ['edge']
    assert [pair.pair.parent_id for pair in binned[4]] == ['last']


def test_human_evaluation_bundle_should_hold_fifteen_pairs():
    bundle = percentile_bundle(_spread_pairs(), HUMAN_EVALUATION_BINS,
                               HUMAN_EVALUATION_PERCENTILES)

    assert len(bundle) == 15
    for index, scored_pair in enumerate(bundle):
        lo, hi = HUMAN_EVALUATION_BINS[index // 3]
        assert lo <= scored_pair.ratio.value <= hi


def test_single_pair_bin_should_repeat_that_pair():
    only = _pair('only', 3.0)

    bundle = percentile_bundle([only], [(0.2, 0.3)], [10.0, 50.0, 90.0])

    assert bundle == [only, only, only]


@pytest.mark.parametrize("percentile", [10.0, 50.0, 90.0, 100.0])
def test_percentile_should_match_sort_oracle(percentile):
    pairs = [_pair('d{}'.format(value), float(value))
             for value in [7, 3, 10, 1, 5, 9, 2, 8, 6, 4]]

    chosen = percentile_bundle(pairs, [(0.2, 0.3)], [percentile])[0]

    ordered = sorted(pair.noir.value for pair in pairs)
    expected = ordered[max(1, math.ceil(percentile / 100 * 10)) - 1]
    assert chosen.noir.value == expected


def test_ties_should_go_to_smallest_parent_id():
    pairs = [_pair('b', 5.0), _pair('a', 5.0), _pair('c', 1.0)]

    chosen = percentile_bundle(pairs, [(0.2, 0.3)], [90.0])[0]

    assert chosen.pair.parent_id == 'a'


def test_nearest_rank_percentile():
    assert nearest_rank_percentile([1, 2, 3, 4], 50.0) == 2
    assert nearest_rank_percentile([1, 2, 3, 4], 0.0) == 1


def test_empty_bin_should_raise():
    with pytest.raises(EmptyBinError):
        percentile_bundle([_pair('a', 1.0)], [(0.6, 0.8)], [50.0])
