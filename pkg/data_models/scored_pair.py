"""This class creates the object structure for a scored pair"""


class ScoredPair:
    """An evaluation pair with its token counts, similarity and NOIR"""

    TABLE_HEADER = [
        'parent_id', 'candidate_id', 'level', 'is_null',
        'tokens_parent', 'tokens_candidate', 'ratio',
        'similarity_raw', 'similarity_clamped', 'noir', 'saturated'
    ]

    def __init__(
            self,
            pair,
            tokens_parent,
            tokens_candidate,
            ratio,
            similarity,
            noir):
        self.pair = pair
        self.tokens_parent = tokens_parent
        self.tokens_candidate = tokens_candidate
        self.ratio = ratio
        self.similarity = similarity
        self.noir = noir

    def item_key(self):
        ''' key identifying the pair across tables '''
        return '{}:{}:{}'.format(
            self.pair.parent_id,
            self.pair.candidate_id,
            self.pair.candidate_level)

    def get_formatted_dict(self):
        ''' Returns the pair as a flat dict in table column order'''
        return {
            'parent_id': self.pair.parent_id,
            'candidate_id': self.pair.candidate_id,
            'level': self.pair.candidate_level,
            'is_null': self.pair.is_null,
            'tokens_parent': self.tokens_parent,
            'tokens_candidate': self.tokens_candidate,
            'ratio': self.ratio.value,
            'similarity_raw': self.similarity.raw,
            'similarity_clamped': self.similarity.clamped,
            'noir': self.noir.value,
            'saturated': self.noir.saturated
        }
