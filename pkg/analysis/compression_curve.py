''' Similarity as a function of compression

Mean raw similarity per compression bin, with its standard error, against
the multiplicative model prediction ratio ** (1 / NOIR).
'''
import logging

import numpy as np

from analysis.ratio_bins import assign_to_bins
from data_models.curve_point import CurvePoint

LOGGER = logging.getLogger(__name__)


def predicted_similarity(ratio, noir):
    ''' similarity the multiplicative model predicts at a ratio'''
    return ratio ** (1.0 / noir)


def similarity_vs_compression_curve(scored_pairs, ratio_bins, noir=None):
    '''
        Returns one CurvePoint per non-empty bin. Pairs are expected to be
        scored against the original text (root-relative ratios).

        Params:
            * noir : optional NOIR value for the model prediction, taken
              at the mean ratio of each bin
    '''
    curve = list()
    for ratio_bin, members in zip(
            ratio_bins, assign_to_bins(scored_pairs, ratio_bins)):
        if not members:
            LOGGER.warning('Skipping empty ratio bin [%s, %s]',
                           ratio_bin[0], ratio_bin[1])
            continue

        similarities = np.array(
            [member.similarity.raw for member in members])
        stderr = float(np.std(similarities, ddof=1)
                       / np.sqrt(len(members))) if len(members) > 1 else 0.0
        prediction = None
        if noir:
            mean_ratio = float(np.mean(
                [member.ratio.value for member in members]))
            prediction = predicted_similarity(mean_ratio, noir)

        curve.append(CurvePoint(ratio_bin, len(members),
                                float(np.mean(similarities)), stderr,
                                prediction))
    return curve
