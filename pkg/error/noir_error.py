"""This script contains all errors"""


class NoirError(Exception):
    """Base class for exceptions"""

    def __init__(self, message):
        super(NoirError, self).__init__(message)
        self.message = message


class IncorrectInputError(NoirError):
    ''' Exception raised when the input format is wrong'''
    def __init__(self, message):
        super(IncorrectInputError, self).__init__(message)


class ZeroTokensError(NoirError):
    """Raise when a text or summary has no tokens"""

    def __init__(self, tokens_summary, tokens_text):
        super().__init__('Token counts must be positive -> '
                         'summary: {}, text: {}'
                         .format(tokens_summary, tokens_text))


class PowerOutOfRangeError(NoirError):
    """Raise when the powered NOIR exponent is outside [0, 2]"""

    def __init__(self, power):
        super().__init__('Power must lie in [0, 2] -> Found {}'
                         .format(power))


class NonPositiveScoreError(NoirError):
    """Raise when a NOIR value cannot be inverted to a degradation"""

    def __init__(self, value):
        super().__init__('Expected a positive NOIR value -> Found {}'
                         .format(value))


class BackendUnavailableError(NoirError):
    '''Exception raised when the embedding backend could not be reached'''

    def __init__(self, reason, response_code=None):
        message = 'Embedding backend unavailable: ' + str(reason)
        if response_code is not None:
            message += ' (response code: ' + str(response_code) + ')'
        super(BackendUnavailableError, self).__init__(message)
        self.response_code = response_code


class UnknownIdError(NoirError):
    """Raise when a precomputed backend has no vector for an id"""

    def __init__(self, key):
        super().__init__('No precomputed embedding for id: {}'.format(key))
        self.key = key


class DimensionMismatchError(NoirError):
    """Raise when vectors of different dimensions meet"""

    def __init__(self, expected, found):
        super().__init__('Expected dimension {} -> Found {}'
                         .format(expected, found))


class ZeroVectorError(NoirError):
    """Raise when a vector has no direction to normalize"""

    def __init__(self, key=None):
        super().__init__('Cannot normalize a zero or non-finite vector' +
                         ('' if key is None else ': {}'.format(key)))
        self.key = key


class NonEmptyInputError(NoirError):
    """Raise when an empty string is sent for embedding"""

    def __init__(self, index):
        super().__init__('Input at position {} is empty'.format(index))


class InsufficientCorpusError(NoirError):
    """Raise when a corpus is too small for random pairing"""

    def __init__(self, message):
        super().__init__(message)


class EmptyTextError(NoirError):
    """Raise when a text has nothing to count"""

    def __init__(self):
        super().__init__('Expected non-empty text -> Found blank text')


class VocabLoadError(NoirError):
    """Raise when a BPE merges file cannot be used"""

    def __init__(self, path, reason):
        super().__init__('Cannot load BPE vocabulary {}: {}'
                         .format(path, reason))


class ParseError(NoirError):
    """Raise when a corpus file line cannot be parsed"""

    def __init__(self, line_number, reason):
        super().__init__('Parse error on line {}: {}'
                         .format(line_number, reason))
        self.line_number = line_number


class DuplicateIdError(NoirError):
    """Raise when two corpus records share an id"""

    def __init__(self, document_id, line_number):
        super().__init__('Duplicate document id "{}" on line {}'
                         .format(document_id, line_number))


class LevelGapError(NoirError):
    """Raise when summary levels do not run 1, 2, 3, ..."""

    def __init__(self, document_id, levels):
        super().__init__('Summary levels of "{}" must run 1..n -> Found {}'
                         .format(document_id, levels))


class DegenerateSampleError(NoirError):
    """Raise when a sample has no spread"""

    def __init__(self, message='Sample has zero variance'):
        super().__init__(message)


class DegenerateXError(NoirError):
    """Raise when a regression has a constant regressor"""

    def __init__(self):
        super().__init__('Cannot fit a trend: all x values are equal')


class MismatchedItemsError(NoirError):
    """Raise when two rankings cover different items"""

    def __init__(self, message):
        super().__init__(message)


class EmptyBinError(NoirError):
    """Raise when a ratio bin holds no pairs"""

    def __init__(self, ratio_bin):
        super().__init__('No scored pairs in ratio bin [{}, {}]'
                         .format(ratio_bin[0], ratio_bin[1]))
        self.ratio_bin = ratio_bin


class PairScoringError(NoirError):
    """Raise when scoring one pair fails; keeps the pair id and cause"""

    def __init__(self, pair_id, cause):
        super().__init__('Failed to score pair {}: {}'
                         .format(pair_id, cause.message))
        self.pair_id = pair_id
        self.cause = cause
