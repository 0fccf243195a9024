"""This class creates the object structure for a corpus document"""


class Document:
    """A text with its hierarchical summary chain

    Level 0 is the original text; level 1 summarizes the text and every
    level n >= 2 summarizes level n - 1.
    """
    TEXT_LEVEL = 0

    def __init__(self, document_id, text, summaries):
        self.id = document_id
        self.text = text
        # list of (level, text) tuples ordered by level
        self.summaries = list(summaries)

    def text_at(self, level):
        """Returns the text at a level, 0 being the original"""

        if level == self.TEXT_LEVEL:
            return self.text
        return self.summaries[level - 1][1]

    def max_level(self):
        return len(self.summaries)

    def has_summary(self):
        return len(self.summaries) > 0

    def embedding_key(self, level):
        """Returns the id used to look up the embedding of a level"""

        return self.key_for(self.id, level)

    @staticmethod
    def key_for(document_id, level):
        return '{}:{}'.format(document_id, level)
