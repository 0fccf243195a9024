"""Flask app exposing NOIR scoring and summary filtering"""

import logging
import re

from flask import Flask, jsonify, request

from error.noir_error import (BackendUnavailableError, DimensionMismatchError,
                              NoirError, UnknownIdError, ZeroVectorError)

LOGGER = logging.getLogger(__name__)

BAD_GATEWAY_ERRORS = (BackendUnavailableError, UnknownIdError,
                      DimensionMismatchError, ZeroVectorError)


def error_code(err):
    """snake_case code of an error class, e.g. backend_unavailable"""

    name = type(err).__name__
    if name.endswith('Error'):
        name = name[:-len('Error')]
    return re.sub(r'(?<!^)(?=[A-Z])', '_', name).lower()


def create_app(scoring_service):
    """Builds the Flask app around a ScoringService"""

    app = Flask(__name__)

    @app.errorhandler(NoirError)
    def handle_noir_error(err):
        status = 502 if isinstance(err, BAD_GATEWAY_ERRORS) else 400
        if status == 502:
            LOGGER.warning('Embedding backend failure: %s', err.message)
        return jsonify({'error': {'code': error_code(err),
                                  'message': err.message}}), status

    @app.route('/v1/health', methods=['GET'])
    def health():
        """Reports liveness and the embedding backend in use"""

        return jsonify(scoring_service.health())

    @app.route('/v1/score', methods=['POST'])
    def score():
        """Scores one candidate summary against its text"""

        body = _json_body()
        return jsonify(scoring_service.handle_score(
            body.get('text'), body.get('candidate')))

    @app.route('/v1/filter', methods=['POST'])
    def filter_candidates():
        """Keeps the candidates whose NOIR reaches the threshold"""

        body = _json_body()
        candidates = body.get('candidates')
        if not isinstance(candidates, list):
            candidates = []
        return jsonify(scoring_service.handle_filter(
            body.get('text'), candidates,
            threshold=body.get('threshold'),
            max_keep=body.get('max_keep')))

    return app


def _json_body():
    body = request.get_json(silent=True)
    return body if isinstance(body, dict) else {}
