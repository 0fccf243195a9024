''' Precomputed embedding backend

Serves vectors read from a file with one record per line:

    <id>\t<real> <real> ... <real>

Vectors may be un-normalized; they are normalized on load. Lookups go by
the caller-supplied id and fall back to the text itself.
'''
import logging
import os

import numpy as np

from embedding.interface_embedder import DEFAULT_MAX_TOKENS, IEmbedder
from error.noir_error import (DimensionMismatchError, ParseError,
                              UnknownIdError, ZeroVectorError)

LOGGER = logging.getLogger(__name__)


class PrecomputedEmbedder(IEmbedder):
    """Embedding backend backed by an id -> vector table"""

    TRUNCATES_INPUT = False

    def __init__(self, vectors_by_id, backend_id='file:memory',
                 max_tokens=DEFAULT_MAX_TOKENS):
        super().__init__(backend_id, max_tokens)
        self.vectors_by_id = dict()
        for key, components in vectors_by_id.items():
            components = np.asarray(components, dtype=np.float64)
            self._check_dimension(components.shape[0])
            norm = np.linalg.norm(components)
            if norm == 0.0 or not np.isfinite(norm):
                raise ZeroVectorError(key)
            self.vectors_by_id[key] = components / norm

    @classmethod
    def from_file(cls, path, max_tokens=DEFAULT_MAX_TOKENS):
        ''' loads a tab-separated embedding file'''
        vectors_by_id = dict()
        dimension = None
        with open(path, 'r', encoding='utf-8') as embedding_file:
            for line_number, line in enumerate(embedding_file, start=1):
                line = line.rstrip('\n')
                if not line.strip():
                    continue
                key, separator, values = line.partition('\t')
                if not separator:
                    raise ParseError(line_number, 'expected <id>\\t<vector>')
                try:
                    components = [float(value) for value in values.split()]
                except ValueError as err:
                    raise ParseError(line_number, err)
                if dimension is None:
                    dimension = len(components)
                elif len(components) != dimension:
                    raise DimensionMismatchError(dimension, len(components))
                vectors_by_id[key] = components

        LOGGER.debug('Loaded %d precomputed vectors from %s',
                     len(vectors_by_id), path)
        return cls(vectors_by_id,
                   backend_id='file:' + os.path.basename(path),
                   max_tokens=max_tokens)

    def _embed_raw(self, texts, ids):
        return [self._lookup(text, ids[index] if ids else None)
                for index, text in enumerate(texts)]

    def _lookup(self, text, key):
        if key is not None and key in self.vectors_by_id:
            return self.vectors_by_id[key]
        if text in self.vectors_by_id:
            return self.vectors_by_id[text]
        raise UnknownIdError(key if key is not None else text)
