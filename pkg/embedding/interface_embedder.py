"""This script creates the Interface shared by embedding backends"""

import logging

from data_models.embedder_profile import EmbedderProfile
from data_models.embedding_vector import EmbeddingVector
from error.noir_error import DimensionMismatchError, NonEmptyInputError
from utils.text_utils import truncate_words

LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_TOKENS = 512


class IEmbedder:
    """Interface for embedding backends

    Subclasses implement _embed_raw, returning one list of components per
    input. embed() validates the inputs, truncates over-length texts,
    normalizes every vector and checks the dimension stays fixed.
    """
    # precomputed backends look texts up verbatim and never cut them
    TRUNCATES_INPUT = True

    def __init__(self, backend_id, max_tokens=DEFAULT_MAX_TOKENS,
                 dimension=None):
        self.backend_id = backend_id
        self.max_tokens = max_tokens
        self.dimension = dimension

    def embed(self, texts, ids=None):
        '''
            Returns one unit-normalized EmbeddingVector per text, in order.

            Params:
                * texts : list of non-empty strings
                * ids : optional parallel list of lookup ids
        '''
        for index, text in enumerate(texts):
            if not text or not text.strip():
                raise NonEmptyInputError(index)
        if not texts:
            return []

        prepared_texts, truncated_flags = self._truncate(texts)
        raw_vectors = self._embed_raw(prepared_texts, ids)

        vectors = list()
        for components, truncated in zip(raw_vectors, truncated_flags):
            self._check_dimension(len(components))
            vectors.append(
                EmbeddingVector.normalized(components, truncated))
        return vectors

    @property
    def profile(self):
        ''' returns the EmbedderProfile of the backend'''
        return EmbedderProfile(
            self.backend_id, self.dimension, self.max_tokens)

    def _embed_raw(self, texts, ids):
        """Returns raw (un-normalized) components for each text."""
        raise NotImplementedError

    def _truncate(self, texts):
        prepared_texts = list()
        truncated_flags = list()
        for text in texts:
            truncated_text, truncated = truncate_words(text, self.max_tokens)
            if truncated:
                LOGGER.warning(
                    'Input longer than %d tokens truncated for %s',
                    self.max_tokens, self.backend_id)
            prepared_texts.append(
                truncated_text if self.TRUNCATES_INPUT else text)
            truncated_flags.append(truncated)
        return prepared_texts, truncated_flags

    def _check_dimension(self, dimension):
        if self.dimension is None:
            self.dimension = dimension
        elif dimension != self.dimension:
            raise DimensionMismatchError(self.dimension, dimension)
