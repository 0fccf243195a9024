''' Length-correlation audit of embeddings

Tests whether an embedder covertly encodes input length: every embedding
dimension (or principal component) is correlated with the text length,
raw or normalized by the length of the original the text paraphrases.
'''
import logging

import numpy as np
from sklearn.decomposition import PCA

from data_models.correlation_audit import CorrelationAudit
from data_models.document import Document
from error.noir_error import DegenerateSampleError, IncorrectInputError

LOGGER = logging.getLogger(__name__)

MIN_SAMPLES = 3


def length_correlation_audit(vectors, lengths):
    '''
        Returns the Pearson r of each dimension against lengths.

        Params:
            * vectors : EmbeddingVectors (or an n x d array)
            * lengths : parallel length measure, raw or normalized
    '''
    matrix = _as_matrix(vectors)
    lengths = np.asarray(lengths, dtype=np.float64)
    if matrix.shape[0] != lengths.shape[0] or lengths.shape[0] < MIN_SAMPLES:
        raise IncorrectInputError(
            'Length audit needs parallel lists of at least {} items'
            .format(MIN_SAMPLES))

    centred_lengths = lengths - lengths.mean()
    length_norm = np.sqrt(np.sum(centred_lengths ** 2))
    if length_norm == 0.0:
        raise DegenerateSampleError('All lengths are equal')

    centred = matrix - matrix.mean(axis=0)
    column_norms = np.sqrt(np.sum(centred ** 2, axis=0))
    degenerate = column_norms == 0.0

    per_dimension_r = np.zeros(matrix.shape[1])
    usable = ~degenerate
    per_dimension_r[usable] = centred_lengths.dot(centred[:, usable]) \
        / (column_norms[usable] * length_norm)
    per_dimension_r = np.clip(per_dimension_r, -1.0, 1.0)

    degenerate_dimensions = np.flatnonzero(degenerate).tolist()
    if degenerate_dimensions:
        LOGGER.warning('%d dimensions have zero variance, r set to 0',
                       len(degenerate_dimensions))
    return CorrelationAudit(per_dimension_r.tolist(), degenerate_dimensions)


def principal_component_audit(vectors, lengths, components=10):
    ''' audits the leading principal components instead of raw dimensions'''
    matrix = _as_matrix(vectors)
    components = min(components, matrix.shape[0], matrix.shape[1])
    projected = PCA(n_components=components).fit_transform(matrix)
    return length_correlation_audit(projected, lengths)


def paraphrase_lengths(documents, token_counter):
    '''
        For a paraphrase corpus, where every level of a Document
        paraphrases its original text, returns parallel lists
        (keys, texts, raw_lengths, normalized_lengths). Originals are
        included with a normalized length of 1.
    '''
    keys, texts, raw_lengths, normalized_lengths = [], [], [], []
    for document in documents:
        original_length = token_counter.count(document.text)
        for level in range(document.max_level() + 1):
            text = document.text_at(level)
            length = token_counter.count(text)
            keys.append(document.embedding_key(level))
            texts.append(text)
            raw_lengths.append(float(length))
            normalized_lengths.append(length / original_length)
    return keys, texts, raw_lengths, normalized_lengths


def paraphrase_similarity_scatter(keys, vectors, normalized_lengths):
    '''
        Returns (normalized_length, similarity to the original) for every
        paraphrase, originals excluded.
    '''
    vectors_by_key = dict(zip(keys, vectors))
    scatter = list()
    for key, vector, normalized_length in zip(
            keys, vectors, normalized_lengths):
        document_id, _, level = key.rpartition(':')
        if int(level) == Document.TEXT_LEVEL:
            continue
        original = vectors_by_key[
            Document.key_for(document_id, Document.TEXT_LEVEL)]
        similarity = float(np.dot(original.components, vector.components))
        scatter.append((normalized_length, similarity))
    return scatter


def _as_matrix(vectors):
    if isinstance(vectors, np.ndarray):
        return vectors.astype(np.float64)
    return np.stack([vector.components for vector in vectors])
