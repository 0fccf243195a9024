"""
    This script is for unit testing of http_embedder
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import json
from unittest.mock import Mock, patch

import pytest
import requests

from embedding.http_embedder import HttpEmbedder
from error.noir_error import BackendUnavailableError, DimensionMismatchError

__BASE_URL = 'http://embedder.test:8000'

# every text maps to a vector built from its length, so order is checkable
__MODEL = 'toy-model'


def _vector_for(text):
    return [float(len(text)), 1.0, 0.0]


def mocked_requests_post(*args, **kwargs):
    inputs = json.loads(kwargs["data"])["inputs"]
    response_dict = {
        "model": __MODEL,
        "dim": 3,
        "embeddings": [_vector_for(text) for text in inputs]
    }
    return Mock(status_code=200, content=json.dumps(response_dict))


def mocked_failing_post(*args, **kwargs):
    return Mock(status_code=503, content='{"error": "overloaded"}')


def mocked_malformed_post(*args, **kwargs):
    return Mock(status_code=200, content='not json')


def mocked_short_vector_post(*args, **kwargs):
    inputs = json.loads(kwargs["data"])["inputs"]
    return Mock(status_code=200, content=json.dumps({
        "model": __MODEL, "dim": 3,
        "embeddings": [[1.0, 0.0] for _ in inputs]}))


def mocked_unreachable_post(*args, **kwargs):
    raise requests.ConnectionError('connection refused')


@patch('embedding.http_embedder.requests.post',
       side_effect=mocked_requests_post)
def test_embed_should_keep_input_order_across_batches(mock_post):
    texts = ['x' * length for length in range(1, 40)]
    embedder = HttpEmbedder(__BASE_URL, batch_size=4, max_in_flight=4)

    vectors = embedder.embed(texts)

    assert mock_post.call_count == 10
    for text, vector in zip(texts, vectors):
        expected = _vector_for(text)
        norm = (expected[0] ** 2 + 1.0) ** 0.5
        assert vector.as_list() == pytest.approx(
            [expected[0] / norm, 1.0 / norm, 0.0])


@patch('embedding.http_embedder.requests.post',
       side_effect=mocked_requests_post)
def test_request_should_use_embed_path_and_wire_format(mock_post):
    HttpEmbedder(__BASE_URL + '/').embed(['hello'])

    args, kwargs = mock_post.call_args
    assert args[0] == __BASE_URL + '/embed'
    assert json.loads(kwargs['data']) == {'inputs': ['hello']}


@patch('embedding.http_embedder.requests.post',
       side_effect=mocked_requests_post)
def test_backend_id_should_name_the_model(mock_post):
    embedder = HttpEmbedder(__BASE_URL)
    embedder.embed(['hello'])

    assert embedder.backend_id == 'http:toy-model'
    assert embedder.profile.dimension == 3


@patch('embedding.http_embedder.requests.post',
       side_effect=mocked_requests_post)
def test_profile_should_probe_unknown_dimension(mock_post):
    profile = HttpEmbedder(__BASE_URL).profile

    assert profile.dimension == 3
    assert mock_post.call_count == 1


@patch('embedding.http_embedder.requests.post',
       side_effect=mocked_failing_post)
def test_non_200_status_should_raise(mock_post):
    with pytest.raises(BackendUnavailableError) as err:
        HttpEmbedder(__BASE_URL).embed(['hello'])

    assert err.value.response_code == 503


def mocked_post_returning(embeddings, dim=2):
    def mocked_post(*args, **kwargs):
        return Mock(status_code=200, content=json.dumps({
            "model": __MODEL, "dim": dim, "embeddings": embeddings}))
    return mocked_post


broken_backend_test_data = [
    mocked_malformed_post,
    mocked_unreachable_post,
    mocked_post_returning([1, 2]),
    mocked_post_returning([None]),
    mocked_post_returning([["a", "b"]]),
    mocked_post_returning([[True, False]]),
    mocked_post_returning([[0.0, 0.0]]),
    mocked_post_returning("embeddings"),
    mocked_post_returning([[1.0, 0.0], [0.0, 1.0]]),
    mocked_post_returning([[]], dim=0),
    mocked_post_returning([[1.0, 0.0]], dim="two"),
]


@pytest.mark.parametrize("side_effect", broken_backend_test_data)
def test_broken_backend_should_raise(side_effect):
    with patch('embedding.http_embedder.requests.post',
               side_effect=side_effect):
        with pytest.raises(BackendUnavailableError):
            HttpEmbedder(__BASE_URL).embed(['hello'])


@patch('embedding.http_embedder.requests.post',
       side_effect=mocked_short_vector_post)
def test_vector_shorter_than_dim_should_raise(mock_post):
    with pytest.raises(DimensionMismatchError):
        HttpEmbedder(__BASE_URL).embed(['hello'])


@patch('embedding.http_embedder.requests.post',
       side_effect=mocked_requests_post)
def test_long_text_should_be_truncated_before_posting(mock_post):
    text = ' '.join(['word'] * 30)

    vector = HttpEmbedder(__BASE_URL, max_tokens=5).embed([text])[0]

    sent = json.loads(mock_post.call_args[1]['data'])['inputs'][0]
    assert sent == ' '.join(['word'] * 5)
    assert vector.truncated is True
