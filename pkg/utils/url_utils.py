"""This script contains helper utilities for embedding backend URLs"""
import validators


def valid_url(url):
    """Adds necessary fix and validates URL

    Returns the URL without a trailing slash, or None when invalid.
    """

    if url.startswith('//'):
        url = 'http:{}'.format(url)

    # validators rejects bare hosts such as localhost without a tld
    if validators.url(url, simple_host=True):
        return url.rstrip('/')

    return None


def join_url(base_url, path):
    """Joins a base URL and an absolute path"""

    return base_url.rstrip('/') + '/' + path.lstrip('/')
