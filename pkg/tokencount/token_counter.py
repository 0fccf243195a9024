''' Module to count the tokens of a text

Supported strategies:
    * whitespace : number of maximal non-whitespace runs
    * chars4 : ceil(characters / 4)
    * bpe : number of byte-pair symbols under a merges file
'''
import functools
import math

from data_models.token_counter_spec import TokenCounterSpec
from error.noir_error import EmptyTextError
from tokencount.bpe_vocabulary import BpeVocabulary


class TokenCounter:
    """Counts tokens of texts under one TokenCounterSpec

    The vocabulary is loaded once at construction; counting is
    read-only afterwards and safe from any thread.
    """
    CHARS_PER_TOKEN = 4

    def __init__(self, spec):
        self.spec = spec
        self.vocabulary = None
        if spec.strategy == TokenCounterSpec.BPE:
            self.vocabulary = BpeVocabulary.from_file(spec.vocab_path)

    def count(self, text):
        ''' returns the number of tokens in text'''
        if not text or not text.strip():
            raise EmptyTextError()

        if self.spec.strategy == TokenCounterSpec.WHITESPACE:
            return len(text.split())

        if self.spec.strategy == TokenCounterSpec.CHARS4:
            return math.ceil(len(text) / self.CHARS_PER_TOKEN)

        return sum(len(self.vocabulary.encode_word(word))
                   for word in text.split())


@functools.lru_cache(maxsize=None)
def get_token_counter(spec):
    ''' returns a shared counter per TokenCounterSpec, loading its vocabulary
        once'''
    return TokenCounter(spec)


def count_tokens(text, spec):
    ''' counts the tokens of text under a TokenCounterSpec'''
    return get_token_counter(spec).count(text)
