''' Builds an embedding backend from a selector string

    file:<path>          precomputed vectors
    http(s)://host:port  HTTP embedding service
    local:<model name>   sentence-transformers model in process
'''
import os

from embedding.http_embedder import HttpEmbedder
from embedding.interface_embedder import DEFAULT_MAX_TOKENS
from embedding.precomputed_embedder import PrecomputedEmbedder
from error.noir_error import IncorrectInputError
from utils.url_utils import valid_url

EMBED_URL_ENVIRONMENT_VARIABLE = 'NOIR_EMBED_URL'
FILE_PREFIX = 'file:'
LOCAL_PREFIX = 'local:'


def resolve_selector(selector):
    ''' returns the selector, falling back to the NOIR_EMBED_URL variable'''
    if selector:
        return selector
    selector = os.environ.get(EMBED_URL_ENVIRONMENT_VARIABLE)
    if not selector:
        raise IncorrectInputError(
            'No embedder selected: pass --embedder or set '
            + EMBED_URL_ENVIRONMENT_VARIABLE)
    return selector


def build_embedder(selector, max_tokens=DEFAULT_MAX_TOKENS,
                   max_in_flight=4):
    ''' returns the embedding backend named by selector'''
    selector = resolve_selector(selector)

    if selector.startswith(FILE_PREFIX):
        return PrecomputedEmbedder.from_file(
            selector[len(FILE_PREFIX):], max_tokens=max_tokens)

    if selector.startswith(LOCAL_PREFIX):
        from embedding.sentence_transformer_embedder import \
            SentenceTransformerEmbedder
        return SentenceTransformerEmbedder(
            selector[len(LOCAL_PREFIX):] or
            SentenceTransformerEmbedder.DEFAULT_MODEL)

    base_url = valid_url(selector)
    if base_url is None:
        raise IncorrectInputError(
            'Embedder must be file:<path>, local:<model> or an http(s) '
            'URL -> Found ' + selector)
    return HttpEmbedder(base_url, max_tokens=max_tokens,
                        max_in_flight=max_in_flight)
