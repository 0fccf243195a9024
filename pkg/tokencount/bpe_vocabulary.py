''' Byte-pair merge vocabulary

Loads a plain-text merges file, one rule "token_a token_b" per line ranked
by line order, and applies the merges to words. The base alphabet is the
256 byte values of the UTF-8 encoding, each mapped to one character.
'''
import logging

from error.noir_error import VocabLoadError

LOGGER = logging.getLogger(__name__)


class BpeVocabulary:
    """Ranked merge rules over a byte alphabet"""

    COMMENT_PREFIX = '#'

    def __init__(self, merge_ranks):
        # (token_a, token_b) -> rank, lower merges first
        self.merge_ranks = dict(merge_ranks)

    @classmethod
    def from_file(cls, vocab_path):
        ''' reads a merges file; blank and # lines are skipped'''
        try:
            with open(vocab_path, 'r', encoding='utf-8') as merges_file:
                lines = merges_file.read().splitlines()
        except (IOError, OSError) as err:
            raise VocabLoadError(vocab_path, err)

        merge_ranks = dict()
        for line_number, line in enumerate(lines, start=1):
            if not line.strip() or line.startswith(cls.COMMENT_PREFIX):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise VocabLoadError(
                    vocab_path,
                    'line {} is not a "token_a token_b" rule'
                    .format(line_number))
            pair = (tokens[0], tokens[1])
            if pair not in merge_ranks:
                merge_ranks[pair] = len(merge_ranks)

        LOGGER.debug('Loaded %d merge rules from %s',
                     len(merge_ranks), vocab_path)
        return cls(merge_ranks)

    def encode_word(self, word):
        '''
            Splits a word into its byte symbols and applies merges,
            always the lowest-ranked adjacent pair first, until no
            adjacent pair has a rule. Returns the list of symbols.
        '''
        symbols = [chr(byte) for byte in word.encode('utf-8')]

        while len(symbols) > 1:
            ranked_pairs = [
                (self.merge_ranks[pair], index)
                for index, pair in enumerate(zip(symbols, symbols[1:]))
                if pair in self.merge_ranks
            ]
            if not ranked_pairs:
                break
            best_rank = min(ranked_pairs)[0]
            symbols = self._merge_all(symbols, best_rank)

        return symbols

    def _merge_all(self, symbols, rank):
        # merge every non-overlapping occurrence of the ranked pair,
        # scanning left to right
        merged = list()
        index = 0
        while index < len(symbols):
            if index + 1 < len(symbols) and self.merge_ranks.get(
                    (symbols[index], symbols[index + 1])) == rank:
                merged.append(symbols[index] + symbols[index + 1])
                index += 2
            else:
                merged.append(symbols[index])
                index += 1
        return merged
