''' Picks representative pairs for human evaluation

Within each compression bin, the pair whose NOIR is nearest each requested
percentile of the bin's NOIR sample is selected. Percentiles use the
nearest-rank convention on the sorted sample.
'''
import math

from analysis.ratio_bins import assign_to_bins
from error.noir_error import EmptyBinError, IncorrectInputError

HUMAN_EVALUATION_PERCENTILES = [10.0, 50.0, 90.0]


def nearest_rank_percentile(sorted_values, percentile):
    ''' value at rank ceil(p / 100 * n), rank at least 1'''
    if not 0.0 <= percentile <= 100.0:
        raise IncorrectInputError(
            'Percentile must lie in [0, 100] -> Found {}'.format(percentile))
    rank = max(1, math.ceil(percentile / 100.0 * len(sorted_values)))
    return sorted_values[rank - 1]


def percentile_bundle(scored_pairs, ratio_bins, percentiles):
    '''
        Returns len(ratio_bins) * len(percentiles) scored pairs, bin by bin,
        percentiles in the requested order. Ties on the distance to the
        percentile value go to the lexicographically smallest parent id.
    '''
    bundle = list()
    for ratio_bin, members in zip(
            ratio_bins, assign_to_bins(scored_pairs, ratio_bins)):
        if not members:
            raise EmptyBinError(ratio_bin)
        sorted_noir = sorted(member.noir.value for member in members)
        for percentile in percentiles:
            target = nearest_rank_percentile(sorted_noir, percentile)
            bundle.append(min(
                members,
                key=lambda member: (abs(member.noir.value - target),
                                    member.pair.parent_id,
                                    member.pair.candidate_id,
                                    member.pair.candidate_level)))
    return bundle
