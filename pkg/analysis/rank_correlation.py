''' Rank and linear agreement between two scorings'''

import numpy as np
import scipy.stats

from error.noir_error import MismatchedItemsError

MIN_COMMON_PAIRS = 3


def spearman_rank(ranking_a, ranking_b):
    '''
        Spearman rank correlation 1 - 6 sum(d^2) / (n (n^2 - 1)).

        Params:
            * ranking_a, ranking_b : dicts item -> rank or score over the
              same items; ties get average ranks
    '''
    if set(ranking_a) != set(ranking_b):
        raise MismatchedItemsError(
            'Rankings must cover the same items')
    items = sorted(ranking_a)
    n = len(items)
    if n < 2:
        raise MismatchedItemsError('Rank correlation needs 2 or more items')

    ranks_a = scipy.stats.rankdata([ranking_a[item] for item in items])
    ranks_b = scipy.stats.rankdata([ranking_b[item] for item in items])
    squared_differences = float(np.sum((ranks_a - ranks_b) ** 2))
    return 1.0 - 6.0 * squared_differences / (n * (n * n - 1))


def embedder_agreement(scored_a, scored_b):
    '''
        Pearson correlation of the NOIR values two embedders gave the same
        pairs. Returns (r, number of common pairs).
    '''
    noir_by_item = {scored_pair.item_key(): scored_pair.noir.value
                    for scored_pair in scored_b}
    common = [(scored_pair.noir.value, noir_by_item[scored_pair.item_key()])
              for scored_pair in scored_a
              if scored_pair.item_key() in noir_by_item]
    if len(common) < MIN_COMMON_PAIRS:
        raise MismatchedItemsError(
            'Need at least {} pairs scored by both embedders -> Found {}'
            .format(MIN_COMMON_PAIRS, len(common)))

    values_a, values_b = zip(*common)
    r, _ = scipy.stats.pearsonr(values_a, values_b)
    return float(r), len(common)
