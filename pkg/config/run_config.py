''' Run configuration

Values come from, in decreasing precedence: command-line flags, a plain
text config file of "key = value" lines, the NOIR_EMBED_URL environment
variable (embedder only) and the defaults below.
'''
import logging
import os

from data_models.token_counter_spec import TokenCounterSpec
from embedding.embedder_factory import EMBED_URL_ENVIRONMENT_VARIABLE
from error.noir_error import IncorrectInputError
from metric.noir_metric import DEFAULT_EPSILON_D, DEFAULT_M_CAP

LOGGER = logging.getLogger(__name__)

DEFAULTS = {
    'corpus': None,
    'embedder': None,
    'tokens': TokenCounterSpec.WHITESPACE,
    'vocab': None,
    'epsilon_d': DEFAULT_EPSILON_D,
    'm_cap': DEFAULT_M_CAP,
    'seed': 0,
    'out': 'output/',
    'trials': 1368,
    'threshold': 0.0,
    'max_keep': None,
    'max_tokens': 512,
    'max_in_flight': 4,
}

CONVERTERS = {
    'epsilon_d': float,
    'm_cap': float,
    'seed': int,
    'trials': int,
    'threshold': float,
    'max_keep': int,
    'max_tokens': int,
    'max_in_flight': int,
}

MAX_EPSILON_D = 0.1


class RunConfig:
    """Resolved settings of one run"""

    def __init__(self, **settings):
        unknown_keys = set(settings) - set(DEFAULTS)
        if unknown_keys:
            raise IncorrectInputError(
                'Unknown configuration keys: ' +
                ', '.join(sorted(unknown_keys)))

        values = dict(DEFAULTS)
        for key, value in settings.items():
            if value is not None:
                values[key] = _convert(key, value)

        self.corpus_path = values['corpus']
        self.embedder = values['embedder']
        self.token_spec = TokenCounterSpec(values['tokens'], values['vocab'])
        self.epsilon_d = values['epsilon_d']
        self.m_cap = values['m_cap']
        self.seed = values['seed']
        self.output_dir = values['out']
        self.trials = values['trials']
        self.threshold = values['threshold']
        self.max_keep = values['max_keep']
        self.max_tokens = values['max_tokens']
        self.max_in_flight = values['max_in_flight']
        self._validate()

    @classmethod
    def resolve(cls, flags, config_path=None, environ=None):
        '''
            Merges flag values over the config file over the environment.

            Params:
                * flags : dict of flag values, None meaning "not given"
                * config_path : optional key = value file
                * environ : mapping used for NOIR_EMBED_URL
        '''
        environ = os.environ if environ is None else environ
        settings = dict()
        if environ.get(EMBED_URL_ENVIRONMENT_VARIABLE):
            settings['embedder'] = environ[EMBED_URL_ENVIRONMENT_VARIABLE]
        if config_path:
            settings.update(read_config_file(config_path))
        settings.update({key: value for key, value in flags.items()
                         if value is not None and key in DEFAULTS})
        return cls(**settings)

    def get_formatted_dict(self):
        ''' returns the settings as manifest key/value pairs'''
        return {
            'corpus': self.corpus_path,
            'embedder': self.embedder,
            'tokens': self.token_spec.strategy,
            'vocab': self.token_spec.vocab_path,
            'epsilon_d': self.epsilon_d,
            'm_cap': self.m_cap,
            'seed': self.seed,
            'out': self.output_dir,
            'trials': self.trials,
            'threshold': self.threshold,
            'max_keep': self.max_keep,
            'max_tokens': self.max_tokens,
            'max_in_flight': self.max_in_flight,
        }

    def _validate(self):
        if not 0.0 < self.epsilon_d <= MAX_EPSILON_D:
            raise IncorrectInputError(
                'epsilon_d must lie in (0, {}] -> Found {}'
                .format(MAX_EPSILON_D, self.epsilon_d))
        if not self.m_cap > 0.0:
            raise IncorrectInputError(
                'm_cap must be positive -> Found {}'.format(self.m_cap))


def read_config_file(path):
    ''' parses "key = value" lines, skipping blanks and # comments'''
    settings = dict()
    with open(path, 'r', encoding='utf-8') as config_file:
        for line_number, line in enumerate(config_file, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            key, separator, value = line.partition('=')
            if not separator:
                raise IncorrectInputError(
                    '{} line {}: expected key = value'
                    .format(path, line_number))
            settings[key.strip()] = value.strip()
    LOGGER.debug('Read %d settings from %s', len(settings), path)
    return settings


def _convert(key, value):
    if key not in CONVERTERS or not isinstance(value, str):
        return value
    try:
        return CONVERTERS[key](value)
    except ValueError:
        raise IncorrectInputError(
            'Config value for {} is not a number: {}'.format(key, value))
