"""This class creates the object structure for an evaluation pair"""


class EvalPair:
    """A (parent, candidate) pairing to score

    Attributes:
        * parent_id / parent_level : document and level of the parent,
          level 0 being the original text
        * candidate_id / candidate_level : document and level of the
          candidate summary
        * is_null : True when the candidate does not summarize the parent
    """

    def __init__(
            self,
            parent_id,
            parent_level,
            candidate_id,
            candidate_level,
            is_null=False):
        self.parent_id = parent_id
        self.parent_level = parent_level
        self.candidate_id = candidate_id
        self.candidate_level = candidate_level
        self.is_null = is_null

    def pair_id(self):
        return '{}:{}->{}:{}'.format(
            self.parent_id, self.parent_level,
            self.candidate_id, self.candidate_level)

    def _key(self):
        return (self.parent_id, self.parent_level,
                self.candidate_id, self.candidate_level, self.is_null)

    def __eq__(self, other):
        return isinstance(other, EvalPair) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'EvalPair({}, null={})'.format(self.pair_id(), self.is_null)
