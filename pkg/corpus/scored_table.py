''' Reads and writes scored pairs as comma-separated tables

Floats are written at full precision and read back with round-trip
parsing, so a NOIR value is recomputable bitwise from the stored token
counts and similarity.
'''
import pandas as pd

from data_models.compression_ratio import CompressionRatio
from data_models.eval_pair import EvalPair
from data_models.noir_score import NoirScore
from data_models.scored_pair import ScoredPair
from data_models.similarity_score import SimilarityScore
from error.noir_error import ParseError

# true pairs are stored without their parent level; scored tables keep
# only what is needed to recompute the metric
UNKNOWN_PARENT_LEVEL = -1


def scored_pairs_to_frame(scored_pairs):
    ''' returns a DataFrame with the scored-table columns'''
    return pd.DataFrame(
        [scored_pair.get_formatted_dict() for scored_pair in scored_pairs],
        columns=ScoredPair.TABLE_HEADER)


def write_scored_table(scored_pairs, path_or_buffer):
    ''' writes scored pairs with the documented header'''
    scored_pairs_to_frame(scored_pairs).to_csv(
        path_or_buffer, index=False, lineterminator='\n')


def read_scored_table(path, epsilon_d):
    ''' reads a table written by write_scored_table back into ScoredPairs'''
    try:
        frame = pd.read_csv(path, float_precision='round_trip',
                            dtype={'parent_id': str, 'candidate_id': str})
    except (ValueError, pd.errors.ParserError) as err:
        raise ParseError(0, '{}: {}'.format(path, err))

    missing_columns = set(ScoredPair.TABLE_HEADER) - set(frame.columns)
    if missing_columns:
        raise ParseError(1, 'missing columns {}'.format(
            ', '.join(sorted(missing_columns))))

    scored_pairs = list()
    for row in frame.itertuples(index=False):
        is_null = bool(row.is_null)
        pair = EvalPair(
            row.parent_id,
            0 if is_null else UNKNOWN_PARENT_LEVEL,
            row.candidate_id,
            int(row.level),
            is_null=is_null)
        scored_pairs.append(ScoredPair(
            pair,
            int(row.tokens_parent),
            int(row.tokens_candidate),
            CompressionRatio(int(row.tokens_candidate),
                             int(row.tokens_parent)),
            SimilarityScore(float(row.similarity_raw), epsilon_d),
            NoirScore(float(row.noir), 1.0, bool(row.saturated))))
    return scored_pairs
