''' Generates evaluation pairs from documents

* true pairs compare each summary level to the level it summarizes, or to
  the original text when root_relative is set
* null pairs match an original text with the level-1 summary of a
  different document
'''
import numpy as np

from data_models.document import Document
from data_models.eval_pair import EvalPair
from error.noir_error import InsufficientCorpusError


def true_pairs(documents, root_relative=False):
    ''' returns one pair per summary level of every document'''
    pairs = list()
    for document in documents:
        for level in range(1, document.max_level() + 1):
            parent_level = Document.TEXT_LEVEL if root_relative \
                else level - 1
            pairs.append(
                EvalPair(document.id, parent_level, document.id, level))
    return pairs


def null_pairs(documents, trials, seed):
    '''
        Returns trials pairs of a text with a level-1 summary of another
        document, drawn uniformly with the seed.
    '''
    if len(documents) < 2:
        raise InsufficientCorpusError(
            'Null pairing needs at least 2 documents -> Found {}'
            .format(len(documents)))

    summarized = [index for index, document in enumerate(documents)
                  if document.has_summary()]
    parents = [index for index in range(len(documents))
               if any(other != index for other in summarized)]
    if not parents:
        raise InsufficientCorpusError(
            'Null pairing needs a summary of a different document')

    random_generator = np.random.default_rng(seed)
    pairs = list()
    for _ in range(trials):
        parent_index = parents[random_generator.integers(len(parents))]
        candidates = [index for index in summarized
                      if index != parent_index]
        candidate_index = candidates[
            random_generator.integers(len(candidates))]
        pairs.append(EvalPair(
            documents[parent_index].id, Document.TEXT_LEVEL,
            documents[candidate_index].id, 1, is_null=True))
    return pairs
