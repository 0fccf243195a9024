''' Cosine similarity between unit embedding vectors'''

import numpy as np

from error.noir_error import DimensionMismatchError


def cosine_similarity(vector_a, vector_b, metric):
    '''
        Returns the SimilarityScore of two unit vectors: their dot
        product, clipped to [-1, 1] against rounding drift.

        Params:
            * vector_a, vector_b : EmbeddingVector of equal dimension
            * metric : NoirMetric supplying the similarity floor
    '''
    if vector_a.dimension != vector_b.dimension:
        raise DimensionMismatchError(vector_a.dimension, vector_b.dimension)

    raw = float(np.dot(vector_a.components, vector_b.components))
    return metric.similarity(min(max(raw, -1.0), 1.0))


def paired_dot_products(vectors_a, vectors_b):
    ''' row-wise dot products of two equally long lists of vectors'''
    matrix_a = np.stack([vector.components for vector in vectors_a])
    matrix_b = np.stack([vector.components for vector in vectors_b])
    if matrix_a.shape[1] != matrix_b.shape[1]:
        raise DimensionMismatchError(matrix_a.shape[1], matrix_b.shape[1])
    return np.clip(np.einsum('ij,ij->i', matrix_a, matrix_b), -1.0, 1.0)
