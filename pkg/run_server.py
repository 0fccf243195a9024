"""Initiate Flask app

Settings come from the config file named by NOIR_CONFIG (if any) and
NOIR_EMBED_URL; the port from PORT (8080 by default).
"""

import os

from api.server import create_app
from config.run_config import RunConfig
from noir_pipeline import build_scoring_service

if __name__ == '__main__':
    run_config = RunConfig.resolve({}, os.environ.get('NOIR_CONFIG'))
    app = create_app(build_scoring_service(run_config))
    app.run(host="0.0.0.0", port=int(os.environ.get('PORT', 8080)),
            threaded=True)
