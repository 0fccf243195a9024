''' Writes result tables, the run manifest and the analysis report'''

import logging
import os

import pandas as pd
from jinja2 import Environment, FileSystemLoader

from corpus.scored_table import write_scored_table

LOGGER = logging.getLogger(__name__)

TOOLKIT_VERSION = '1.0.0'
MANIFEST_FILE = 'manifest.txt'
TEMPLATE_DIRECTORY = os.path.join(os.path.dirname(__file__), 'templates')


class ReportWriter:
    """Writes every artifact of a run into one output directory"""

    def __init__(self, output_dir):
        self.output_dir = output_dir
        os.makedirs(output_dir, exist_ok=True)
        self.environment = Environment(
            loader=FileSystemLoader(TEMPLATE_DIRECTORY),
            keep_trailing_newline=True)
        self.environment.filters['fmt'] = format_optional

    def path(self, file_name):
        return os.path.join(self.output_dir, file_name)

    def write_scored_pairs(self, scored_pairs, file_name='scored.csv'):
        path = self.path(file_name)
        write_scored_table(scored_pairs, path)
        LOGGER.info('Wrote %d scored pairs to %s', len(scored_pairs), path)
        return path

    def write_table(self, rows, columns, file_name):
        ''' writes a list of dicts as a comma-separated table'''
        path = self.path(file_name)
        pd.DataFrame(rows, columns=columns).to_csv(
            path, index=False, lineterminator='\n')
        LOGGER.info('Wrote %s', path)
        return path

    def write_manifest(self, command, config, backend_id=None):
        ''' writes the key = value reproducibility manifest'''
        entries = {
            'command': command,
            'toolkit_version': TOOLKIT_VERSION,
            'seed': config.seed,
            'backend_id': backend_id,
        }
        for key, value in config.get_formatted_dict().items():
            entries.setdefault(key, value)

        path = self.path(MANIFEST_FILE)
        with open(path, 'w', encoding='utf-8') as manifest_file:
            for key, value in entries.items():
                manifest_file.write('{} = {}\n'.format(
                    key, '' if value is None else value))
        return path

    def write_report(self, template_name, file_name, **context):
        ''' renders a Jinja2 template from report/templates'''
        path = self.path(file_name)
        rendered = self.environment.get_template(template_name) \
            .render(**context)
        with open(path, 'w', encoding='utf-8') as report_file:
            report_file.write(rendered)
        return path


def format_optional(value, precision=4):
    ''' formats a number, or "-" for values that were not computed'''
    if value is None:
        return '-'
    return '{:.{}f}'.format(value, precision)
