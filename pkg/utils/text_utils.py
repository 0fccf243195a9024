"""This script contains helper utilities for cleaning texts"""


def clean_text(text):
    """Collapses every whitespace run to a single space and trims the ends"""

    return ' '.join(text.split())


def truncate_words(text, max_tokens):
    """Cuts a text to its first max_tokens whitespace-separated words

    Returns (text, was_truncated).
    """

    words = text.split()
    if len(words) <= max_tokens:
        return text, False
    return ' '.join(words[:max_tokens]), True
