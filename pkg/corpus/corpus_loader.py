''' Corpus loader

Reads line-delimited JSON records, one document per line:

    {"id": "...", "text": "...", "summaries": [{"level": 1, "text": "..."}]}

Texts are cleaned (whitespace runs collapsed) on load.
'''
import json
import logging

from data_models.document import Document
from error.noir_error import DuplicateIdError, LevelGapError, ParseError
from utils.text_utils import clean_text

LOGGER = logging.getLogger(__name__)


class CorpusLoader:
    """Loads and validates a corpus file"""

    def __init__(self, path):
        self.path = path
        self.documents = list()
        self._seen_ids = dict()

    def load_corpus(self):
        ''' returns the list of Documents in file order'''
        with open(self.path, 'r', encoding='utf-8') as corpus_file:
            for line_number, line in enumerate(corpus_file, start=1):
                if not line.strip():
                    continue
                self._add_document(self._parse_line(line, line_number),
                                   line_number)

        if not self.documents:
            raise ParseError(0, 'corpus {} holds no records'
                             .format(self.path))

        LOGGER.debug('Loaded %d documents from %s',
                     len(self.documents), self.path)
        return self.documents

    def _parse_line(self, line, line_number):
        try:
            record = json.loads(line)
            document_id = str(record['id'])
            text = clean_text(record['text'])
            summaries = [
                (int(summary['level']), clean_text(summary['text']))
                for summary in record.get('summaries', [])
            ]
        except (ValueError, TypeError, KeyError, AttributeError) as err:
            raise ParseError(line_number, err)

        if not text or any(not summary_text
                           for _, summary_text in summaries):
            raise ParseError(line_number,
                             'empty text in record "{}"'.format(document_id))

        levels = [level for level, _ in summaries]
        if levels != list(range(1, len(levels) + 1)):
            raise LevelGapError(document_id, levels)

        return Document(document_id, text, summaries)

    def _add_document(self, document, line_number):
        if document.id in self._seen_ids:
            raise DuplicateIdError(document.id, line_number)
        self._seen_ids[document.id] = line_number
        self.documents.append(document)


def load_corpus(path):
    ''' loads the corpus at path'''
    return CorpusLoader(path).load_corpus()
