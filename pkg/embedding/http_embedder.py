'''HTTP Embedding Backend

This module calls a remote embedding service speaking the wire format

    POST <base_url>/embed  {"inputs": ["...", ...]}
    200 {"model": "<string>", "dim": <int>, "embeddings": [[...], ...]}

Inputs are split into batches that are posted concurrently, up to
max_in_flight requests at a time, and reassembled in input order.
'''

import concurrent.futures as cf
import json
import logging
import math
import numbers
import threading

import requests

from embedding.interface_embedder import DEFAULT_MAX_TOKENS, IEmbedder
from error.noir_error import BackendUnavailableError, DimensionMismatchError
from utils.url_utils import join_url

LOGGER = logging.getLogger(__name__)


class HttpEmbedder(IEmbedder):
    '''
    A class to retrieve embeddings from an HTTP embedding service
    Params:
      base_url : service root, the /embed path is appended
      batch_size : number of texts per request
      max_in_flight : maximum number of concurrent requests
    '''
    EMBED_PATH = '/embed'
    PROBE_TEXT = 'ping'

    def __init__(self, base_url, max_tokens=DEFAULT_MAX_TOKENS,
                 batch_size=16, max_in_flight=4, timeout=30.0):
        super().__init__('http:' + base_url, max_tokens)
        self.base_url = base_url
        self.api_url = join_url(base_url, self.EMBED_PATH)
        self.batch_size = batch_size
        self.max_in_flight = max_in_flight
        self.timeout = timeout
        self.model = None
        self._lock = threading.Lock()

    @property
    def profile(self):
        ''' probes the service once when the dimension is still unknown'''
        if self.dimension is None:
            self.embed([self.PROBE_TEXT])
        return super().profile

    def _embed_raw(self, texts, ids):
        batches = self._split_into_batches(texts)
        responses = self._make_concurrent_requests(batches)

        # we need to get the same order as that of the given texts
        responses.sort(key=lambda response: response[0])
        embeddings = list()
        for _, batch_embeddings in responses:
            embeddings.extend(batch_embeddings)
        return embeddings

    def _split_into_batches(self, texts):
        return [texts[i:i + self.batch_size]
                for i in range(0, len(texts), self.batch_size)]

    def _make_concurrent_requests(self, batches):
        responses = list()
        with cf.ThreadPoolExecutor(max_workers=self.max_in_flight) \
                as executor:
            future_list = [
                executor.submit(self._make_post_request, batch, i)
                for i, batch in enumerate(batches)]
            for future in cf.as_completed(future_list):
                responses.append(future.result())
        return responses

    def _make_post_request(self, texts, request_number):
        # request number will be used to order
        # all the responses finally
        try:
            response = requests.post(
                self.api_url,
                data=json.dumps({'inputs': texts}),
                headers={'Content-Type': 'application/json'},
                timeout=self.timeout)
        except requests.RequestException as err:
            raise BackendUnavailableError(err)

        if response.status_code != 200:
            raise BackendUnavailableError(
                'request to ' + self.api_url + ' failed',
                response.status_code)

        return request_number, self._parse_response(response, len(texts))

    def _parse_response(self, response, expected_count):
        try:
            body = json.loads(response.content)
            model = body['model']
            dimension = int(body['dim'])
            embeddings = body['embeddings']
        except (ValueError, TypeError, KeyError) as err:
            raise BackendUnavailableError(
                'malformed response body: {}'.format(err))

        if dimension < 1:
            raise BackendUnavailableError(
                'response declares dimension {}'.format(dimension))
        if not isinstance(embeddings, list) \
                or len(embeddings) != expected_count:
            raise BackendUnavailableError(
                'expected {} embeddings in response'.format(expected_count))

        for components in embeddings:
            if not _is_vector(components):
                raise BackendUnavailableError(
                    'embedding is not a list of finite numbers')
            if len(components) != dimension:
                raise DimensionMismatchError(dimension, len(components))
            if not any(components):
                raise BackendUnavailableError('zero embedding vector')

        self._record_model(model, dimension)
        return embeddings

    def _record_model(self, model, dimension):
        with self._lock:
            if self.model is None:
                self.model = model
                self.backend_id = 'http:' + str(model)
                LOGGER.info('Embedding service %s serves model %s (%d)',
                            self.base_url, model, dimension)
            self._check_dimension(dimension)


def _is_vector(components):
    # bool is a numbers.Number, so it is excluded explicitly
    return isinstance(components, list) and all(
        isinstance(value, numbers.Real) and not isinstance(value, bool)
        and math.isfinite(value) for value in components)
