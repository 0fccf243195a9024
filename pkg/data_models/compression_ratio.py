"""This class creates the object structure for a token compression ratio"""


class CompressionRatio:
    """Ratio of summary tokens to parent-text tokens (T_N / T_0)

    The per-step factor and the number of steps of an idealized
    summarizer are never stored: only the observed ratio matters.
    """

    def __init__(self, tokens_summary, tokens_text):
        self.tokens_summary = tokens_summary
        self.tokens_text = tokens_text
        self.value = tokens_summary / tokens_text

    def is_compression(self):
        """Returns true if the summary is shorter than the text"""

        return self.value < 1.0

    def __repr__(self):
        return 'CompressionRatio({}/{}={})'.format(
            self.tokens_summary, self.tokens_text, self.value)
