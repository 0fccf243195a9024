''' Compression-ratio bins shared by the curve and bundle analyses

Bins are half-open [lo, hi) except the last bin of a list, which also
includes its upper edge.
'''
from error.noir_error import IncorrectInputError

HUMAN_EVALUATION_BINS = [
    (0.2, 0.3), (0.3, 0.4), (0.4, 0.5), (0.5, 0.6), (0.6, 0.8)
]
# centred on the halvings 0.5, 0.25 and 0.125
HALVING_BINS = [(0.09, 0.18), (0.18, 0.35), (0.35, 0.7)]


def parse_bins(bins_string):
    ''' parses "lo:hi,lo:hi,..." into a list of (lo, hi) tuples'''
    ratio_bins = list()
    for bin_string in bins_string.split(','):
        try:
            lo, hi = (float(edge) for edge in bin_string.split(':'))
        except ValueError:
            raise IncorrectInputError(
                'Bins must look like lo:hi,lo:hi -> Found ' + bins_string)
        if not lo < hi:
            raise IncorrectInputError(
                'Bin lower edge must be below its upper edge')
        ratio_bins.append((lo, hi))
    return ratio_bins


def assign_to_bins(scored_pairs, ratio_bins):
    ''' returns one list of scored pairs per bin'''
    binned = [list() for _ in ratio_bins]
    last = len(ratio_bins) - 1
    for scored_pair in scored_pairs:
        ratio = scored_pair.ratio.value
        for index, (lo, hi) in enumerate(ratio_bins):
            if lo <= ratio < hi or (index == last and ratio == hi):
                binned[index].append(scored_pair)
                break
    return binned
