"""
    This script is for unit testing of corpus_loader
    Use pytest to run this script
    Command to run: /noir$ python -m pytest
"""
import pytest

from corpus.corpus_loader import load_corpus
from error.noir_error import DuplicateIdError, LevelGapError, ParseError
from tests.unit_test_utils import input_path


def _corpus(file_name):
    return input_path('test_corpus', file_name)


def test_load_corpus_should_keep_file_order_and_levels():
    documents = load_corpus(_corpus('corpus.jsonl'))

    assert [document.id for document in documents] == \
        ['doc1', 'doc2', 'doc3']
    assert [document.max_level() for document in documents] == [3, 1, 0]
    assert documents[0].text_at(3) == 'Town flooded.'


def test_texts_should_be_cleaned():
    documents = load_corpus(_corpus('corpus.jsonl'))

    assert documents[1].text == \
        'A new library opened on Main Street with a reading room and a cafe.'


def test_single_record_should_give_one_document(tmp_path):
    corpus_file = tmp_path / 'one.jsonl'
    corpus_file.write_text(
        '{"id": "x", "text": "Long text.", '
        '"summaries": [{"level": 1, "text": "Text."}]}\n')

    documents = load_corpus(str(corpus_file))

    assert len(documents) == 1
    assert documents[0].max_level() == 1


error_test_data = [('level_gap.jsonl', LevelGapError),
                   ('duplicate_id.jsonl', DuplicateIdError),
                   ('bad_json.jsonl', ParseError),
                   ('empty_summary.jsonl', ParseError),
                   ('empty.jsonl', ParseError)]


@pytest.mark.parametrize("file_name, expected_error", error_test_data)
def test_invalid_corpus_should_raise(file_name, expected_error):
    with pytest.raises(expected_error):
        load_corpus(_corpus(file_name))


def test_parse_error_should_name_the_line():
    with pytest.raises(ParseError) as err:
        load_corpus(_corpus('bad_json.jsonl'))

    assert err.value.line_number == 2
