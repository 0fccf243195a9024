"""
    This script is for unit testing of run_config
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import pytest

from config.run_config import RunConfig, read_config_file
from error.noir_error import IncorrectInputError
from tests.unit_test_utils import input_path

__CONFIG = input_path('test_config', 'noir.conf')


def test_defaults():
    run_config = RunConfig.resolve({}, environ={})

    assert run_config.epsilon_d == 0.01
    assert run_config.m_cap == 1000.0
    assert run_config.trials == 1368
    assert run_config.token_spec.strategy == 'whitespace'
    assert run_config.embedder is None


def test_config_file_should_be_read_and_converted():
    run_config = RunConfig.resolve({}, __CONFIG, environ={})

    assert run_config.seed == 5
    assert run_config.epsilon_d == 0.02
    assert run_config.trials == 200


def test_flags_should_win_over_file_and_environment():
    run_config = RunConfig.resolve(
        {'seed': 9, 'embedder': None, 'command': 'batch'}, __CONFIG,
        environ={'NOIR_EMBED_URL': 'http://localhost:8000'})

    assert run_config.seed == 9
    assert run_config.embedder.startswith('file:')


def test_environment_should_supply_embedder():
    run_config = RunConfig.resolve(
        {}, environ={'NOIR_EMBED_URL': 'http://localhost:8000'})

    assert run_config.embedder == 'http://localhost:8000'


@pytest.mark.parametrize("settings", [{'epsilon_d': 0.0},
                                      {'epsilon_d': 0.5},
                                      {'m_cap': -1.0},
                                      {'colour': 'blue'},
                                      {'seed': 'five'}])
def test_invalid_settings_should_raise(settings):
    with pytest.raises(IncorrectInputError):
        RunConfig(**settings)


def test_broken_config_line_should_raise():
    with pytest.raises(IncorrectInputError):
        read_config_file(input_path('test_config', 'broken.conf'))


def test_formatted_dict_should_list_every_key():
    assert sorted(RunConfig().get_formatted_dict()) == sorted([
        'corpus', 'embedder', 'tokens', 'vocab', 'epsilon_d', 'm_cap',
        'seed', 'out', 'trials', 'threshold', 'max_keep', 'max_tokens',
        'max_in_flight'])


def test_deployed_config_should_leave_embedder_to_environment():
    run_config = RunConfig.resolve(
        {}, './noir.conf',
        environ={'NOIR_EMBED_URL': 'http://embedder:8000'})

    assert run_config.embedder == 'http://embedder:8000'
    assert run_config.token_spec.strategy == 'whitespace'
    assert run_config.threshold == 0.0
