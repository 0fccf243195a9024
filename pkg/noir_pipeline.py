"""This script creates NoirPipeline which pipelines all internal modules"""

import logging
import os
import sys

import numpy as np
import pandas as pd

from analysis.compression_curve import similarity_vs_compression_curve
from analysis.distribution import (describe_sample, separation,
                                   summarize_distribution)
from analysis.expcos_fit import expcos_curves, expcos_fit
from analysis.length_correlation import (length_correlation_audit,
                                         paraphrase_lengths,
                                         paraphrase_similarity_scatter,
                                         principal_component_audit)
from analysis.percentile_bundle import percentile_bundle
from analysis.power_sweep import power_sweep
from analysis.rank_correlation import embedder_agreement, spearman_rank
from analysis.trend import trend_fit
from corpus.corpus_loader import load_corpus
from corpus.pair_generator import null_pairs, true_pairs
from corpus.pair_scorer import PairScorer
from corpus.scored_table import read_scored_table, write_scored_table
from data_models.document import Document
from data_models.eval_pair import EvalPair
from data_models.filter_policy import FilterPolicy
from data_models.noir_score import NoirScore
from embedding.embedder_factory import build_embedder
from embedding.suitability_auditor import SuitabilityAuditor
from error.noir_error import DegenerateSampleError, IncorrectInputError
from metric.noir_metric import NoirMetric
from report.plotter import Plotter
from report.report_writer import TOOLKIT_VERSION, ReportWriter
from service.scoring_service import ScoringService
from tokencount.token_counter import get_token_counter
from utils.text_utils import clean_text

LOGGER = logging.getLogger(__name__)

LOG_FILE = 'noir.log'


def build_scoring_service(run_config, embedder=None):
    ''' returns a ScoringService configured from a RunConfig'''
    embedder = embedder or build_embedder(
        run_config.embedder, run_config.max_tokens,
        run_config.max_in_flight)
    return ScoringService(
        embedder,
        run_config.token_spec,
        NoirMetric(run_config.epsilon_d, run_config.m_cap),
        FilterPolicy(run_config.threshold, run_config.max_keep))


class NoirPipeline:
    """Runs one toolkit command: loads inputs, scores, analyzes and writes
    tables, plots and the reproducibility manifest into the output
    directory.
    """

    def __init__(self, run_config, command, embedder=None):
        self.run_config = run_config
        self.command = command
        self.metric = NoirMetric(run_config.epsilon_d, run_config.m_cap)
        self.report_writer = ReportWriter(run_config.output_dir)
        self.plotter = Plotter(run_config.output_dir)
        self._embedder = embedder
        self._configure_logging()

    @property
    def embedder(self):
        if self._embedder is None:
            self._embedder = build_embedder(
                self.run_config.embedder,
                self.run_config.max_tokens,
                self.run_config.max_in_flight)
        return self._embedder

    def _configure_logging(self):
        for handler in logging.root.handlers[:]:
            logging.root.removeHandler(handler)
        logging.basicConfig(
            filename=self.report_writer.path(LOG_FILE),
            level=logging.DEBUG)

    def _write_manifest(self, uses_embedder=True):
        self.report_writer.write_manifest(
            self.command, self.run_config,
            self.embedder.backend_id if uses_embedder else None)

    def _load_corpus(self, path=None):
        path = path or self.run_config.corpus_path
        if not path:
            raise IncorrectInputError('No corpus given: pass --corpus')
        return load_corpus(path)

    def _score(self, pairs, documents):
        return PairScorer(documents, self.run_config.token_spec,
                          self.embedder, self.metric).score_pairs(pairs)

    def _read_table(self, path):
        return read_scored_table(path, self.run_config.epsilon_d)

    def score(self, text_path, summary_path, stream=sys.stdout):
        ''' scores one (text, summary) pair read from two files'''
        documents = [self._document_from_file(text_path),
                     self._document_from_file(summary_path)]
        pair = EvalPair(documents[0].id, Document.TEXT_LEVEL,
                        documents[1].id, Document.TEXT_LEVEL)
        scored_pairs = self._score([pair], documents)

        write_scored_table(scored_pairs, stream)
        self._write_manifest()
        return scored_pairs[0]

    def _document_from_file(self, path):
        with open(path, 'r', encoding='utf-8') as text_file:
            text = clean_text(text_file.read())
        document_id = os.path.splitext(os.path.basename(path))[0]
        return Document(document_id, text, [])

    def batch(self, root_relative=False):
        ''' scores every summary of the corpus against its parent'''
        documents = self._load_corpus()
        scored_pairs = self._score(
            true_pairs(documents, root_relative), documents)
        self.report_writer.write_scored_pairs(scored_pairs, 'scored.csv')
        self._write_manifest()
        return scored_pairs

    def nullbase(self):
        ''' scores random text / foreign-summary pairings'''
        documents = self._load_corpus()
        pairs = null_pairs(documents, self.run_config.trials,
                           self.run_config.seed)
        scored_pairs = self._score(pairs, documents)
        self.report_writer.write_scored_pairs(scored_pairs, 'null_scored.csv')
        self._write_manifest()
        return scored_pairs

    def analyze(self, true_table, null_table=None, bins=40,
                compare_table=None):
        '''
            Distribution, separation and length-trend analysis of scored
            tables. Returns the dict rendered into report.md.
        '''
        scored_true = self._read_table(true_table)
        true_noir = [pair.noir.value for pair in scored_true]
        true_summary = summarize_distribution(true_noir, bins)
        distributions = [dict(sample='true', **true_summary
                              .get_formatted_dict())]
        samples = {'true summaries': true_noir}

        separation_value = None
        if null_table:
            scored_null = self._read_table(null_table)
            null_noir = [pair.noir.value for pair in scored_null]
            null_summary = self._null_summary(null_noir, bins)
            distributions.append(dict(
                sample='null', **null_summary.get_formatted_dict()))
            separation_value = separation(true_summary, null_summary)
            samples['null pairings'] = null_noir
            self.report_writer.write_table(
                [{'separation': separation_value}], ['separation'],
                'separation.csv')
            self.plotter.histogram(
                'similarity_histogram.svg',
                {'true summaries': [p.similarity.raw for p in scored_true],
                 'null pairings': [p.similarity.raw for p in scored_null]},
                'Cosine similarity', 'similarity', bins=bins)

        tokens_parent = [pair.tokens_parent for pair in scored_true]
        trend = trend_fit(tokens_parent, true_noir)
        self.report_writer.write_table(
            distributions,
            ['sample', 'n', 'mean', 'std', 'stderr', 'gauss_mu',
             'gauss_sigma', 'gauss_mu_err'],
            'distribution.csv')
        self.report_writer.write_table(
            [trend.get_formatted_dict()], ['slope', 'slope_err', 'intercept'],
            'trend.csv')

        agreement = None
        if compare_table:
            agreement = embedder_agreement(
                scored_true, self._read_table(compare_table))

        self.plotter.histogram('noir_histogram.svg', samples,
                               'NOIR distribution', 'NOIR',
                               summary=true_summary, bins=bins)
        self.plotter.scatter('noir_trend.svg', tokens_parent, true_noir,
                             'NOIR against parent length',
                             'parent tokens', 'NOIR', trend=trend)

        context = {
            'version': TOOLKIT_VERSION,
            'backend_id': self.run_config.embedder,
            'distributions': distributions,
            'separation': separation_value,
            'halving': self._halving_factor(true_summary.mean),
            'trend': trend,
            'agreement': agreement,
        }
        self.report_writer.write_report(
            'analysis_report.md.j2', 'report.md', **context)
        self._write_manifest(uses_embedder=False)
        return context

    def _null_summary(self, null_noir, bins):
        # null scores can pile up on one value; keep the moments then
        try:
            return summarize_distribution(null_noir, bins)
        except DegenerateSampleError:
            LOGGER.warning('Null scores have no spread, skipping the fit')
            return describe_sample(null_noir)

    def _halving_factor(self, mean_noir):
        if mean_noir <= 0:
            return None
        return self.metric.degradation_per_halving(NoirScore(mean_noir)).raw

    def sweep_p(self, true_table, null_table, p_grid):
        ''' separation of true and null scores against the power p'''
        sweep_points = power_sweep(
            self._read_table(true_table), self._read_table(null_table),
            p_grid, self.metric)
        self.report_writer.write_table(
            [{'p': point.p, 'separation': point.separation}
             for point in sweep_points],
            ['p', 'separation'], 'sweep.csv')
        self.plotter.curves(
            'sweep.svg', [point.p for point in sweep_points],
            {'separation': [point.separation for point in sweep_points]},
            'True/null separation against numerator power', 'p',
            'separation')
        self._write_manifest(uses_embedder=False)
        return sweep_points

    def corr_length(self, normalized=True, pca_components=0):
        ''' correlates embedding dimensions with paraphrase length'''
        documents = self._load_corpus()
        keys, texts, raw_lengths, normalized_lengths = paraphrase_lengths(
            documents, get_token_counter(self.run_config.token_spec))
        vectors = self.embedder.embed(texts, keys)
        lengths = normalized_lengths if normalized else raw_lengths

        audit = length_correlation_audit(vectors, lengths)
        degenerate = set(audit.degenerate_dimensions)
        self.report_writer.write_table(
            [{'dimension': index, 'r': r, 'degenerate': index in degenerate}
             for index, r in enumerate(audit.per_dimension_r)],
            ['dimension', 'r', 'degenerate'], 'length_correlation.csv')
        self.plotter.histogram(
            'length_correlation.svg', {'dimensions': audit.per_dimension_r},
            'Correlation of embedding dimensions with length', 'Pearson r',
            bins=20)

        if pca_components:
            pca_audit = principal_component_audit(
                vectors, lengths, pca_components)
            self.report_writer.write_table(
                [{'component': index, 'r': r}
                 for index, r in enumerate(pca_audit.per_dimension_r)],
                ['component', 'r'], 'pca_length_correlation.csv')

        scatter = paraphrase_similarity_scatter(
            keys, vectors, normalized_lengths)
        if scatter:
            self.report_writer.write_table(
                [{'normalized_length': length, 'similarity': similarity}
                 for length, similarity in scatter],
                ['normalized_length', 'similarity'],
                'paraphrase_similarity.csv')
            self.plotter.scatter(
                'paraphrase_similarity.svg',
                [point[0] for point in scatter],
                [point[1] for point in scatter],
                'Paraphrase similarity against normalized length',
                'normalized length', 'similarity')

        self._write_manifest()
        return audit

    def expcos_fit(self, similarity_floor, grid_points):
        ''' fits exp(-beta x) to cos(sqrt(x)) down to the floor'''
        beta, rms = expcos_fit(similarity_floor, grid_points)
        self.report_writer.write_table(
            [{'floor': similarity_floor, 'grid_points': grid_points,
              'beta': beta, 'rms': rms}],
            ['floor', 'grid_points', 'beta', 'rms'], 'expcos.csv')
        x, cosine, exponential = expcos_curves(similarity_floor, beta)
        self.plotter.curves(
            'expcos.svg', x,
            {'cos(sqrt(x))': cosine,
             'exp(-{:.2f} x)'.format(beta): exponential},
            'Exponential approximation of the random-walk cosine', 'x',
            'similarity')
        self._write_manifest(uses_embedder=False)
        return beta, rms

    def curve(self, table, ratio_bins, noir=None):
        ''' mean similarity per compression bin'''
        scored_pairs = self._read_table(table)
        curve_points = similarity_vs_compression_curve(
            scored_pairs, ratio_bins, noir)
        self.report_writer.write_table(
            [{'ratio_lo': point.ratio_bin[0],
              'ratio_hi': point.ratio_bin[1],
              'n': point.n,
              'mean_similarity': point.mean_similarity,
              'stderr': point.stderr,
              'predicted_similarity': point.predicted_similarity}
             for point in curve_points],
            ['ratio_lo', 'ratio_hi', 'n', 'mean_similarity', 'stderr',
             'predicted_similarity'], 'curve.csv')
        self.plotter.scatter(
            'similarity_vs_compression.svg',
            [pair.ratio.value for pair in scored_pairs],
            [pair.similarity.raw for pair in scored_pairs],
            'Similarity against compression', 'compression ratio',
            'similarity',
            binned=([sum(point.ratio_bin) / 2 for point in curve_points],
                    [point.mean_similarity for point in curve_points],
                    [point.stderr for point in curve_points]))
        self._write_manifest(uses_embedder=False)
        return curve_points

    def bundle(self, table, ratio_bins, percentiles, human_ranks_path=None):
        '''
            Selects pairs for blind human ranking, shuffled with the seed.
            With a human rank file (columns item,rank; rank 1 is best)
            also returns the rank correlation with NOIR.
        '''
        bundle = percentile_bundle(
            self._read_table(table), ratio_bins, percentiles)
        presentation_order = np.random.default_rng(
            self.run_config.seed).permutation(len(bundle))

        rows = list()
        for index, scored_pair in enumerate(bundle):
            ratio_bin = ratio_bins[index // len(percentiles)]
            rows.append({
                'presentation_order': int(presentation_order[index]) + 1,
                'item': scored_pair.item_key(),
                'bin_lo': ratio_bin[0],
                'bin_hi': ratio_bin[1],
                'percentile': percentiles[index % len(percentiles)],
                'parent_id': scored_pair.pair.parent_id,
                'candidate_id': scored_pair.pair.candidate_id,
                'level': scored_pair.pair.candidate_level,
                'ratio': scored_pair.ratio.value,
                'noir': scored_pair.noir.value
            })
        self.report_writer.write_table(
            rows, ['presentation_order', 'item', 'bin_lo', 'bin_hi',
                   'percentile', 'parent_id', 'candidate_id', 'level',
                   'ratio', 'noir'], 'bundle.csv')

        rank_correlation = None
        if human_ranks_path:
            human_ranks = pd.read_csv(human_ranks_path, dtype={'item': str})
            # NOIR rank 1 is the highest score, matching human rank 1
            noir_ranking = {row['item']: -row['noir'] for row in rows}
            rank_correlation = spearman_rank(
                noir_ranking,
                dict(zip(human_ranks['item'], human_ranks['rank'])))
            self.report_writer.write_table(
                [{'spearman': rank_correlation, 'n': len(rows)}],
                ['spearman', 'n'], 'rank_correlation.csv')

        self._write_manifest(uses_embedder=False)
        return rows, rank_correlation

    def audit_embedder(self, paraphrase_corpus=None, threshold=None):
        ''' checks random pairings of corpus texts score near 0'''
        documents = self._load_corpus()
        paraphrase_pairs, paraphrase_ids = None, None
        if paraphrase_corpus:
            paraphrases = [
                (document, level)
                for document in load_corpus(paraphrase_corpus)
                for level in range(1, document.max_level() + 1)]
            paraphrase_pairs = [(document.text, document.text_at(level))
                                for document, level in paraphrases]
            paraphrase_ids = [
                (document.embedding_key(Document.TEXT_LEVEL),
                 document.embedding_key(level))
                for document, level in paraphrases]

        auditor = SuitabilityAuditor(
            self.embedder,
            threshold or SuitabilityAuditor.DEFAULT_THRESHOLD)
        profile = auditor.audit_suitability(
            [document.text for document in documents],
            self.run_config.trials,
            self.run_config.seed,
            ids=[document.embedding_key(Document.TEXT_LEVEL)
                 for document in documents],
            paraphrase_pairs=paraphrase_pairs,
            paraphrase_ids=paraphrase_ids)

        audit = profile.suitability
        self.report_writer.write_table(
            [{'backend_id': profile.backend_id,
              'dimension': profile.dimension,
              'max_tokens': profile.max_tokens,
              'trials': audit.trials,
              'seed': audit.seed,
              'mean': audit.random_mean,
              'std': audit.random_std,
              'paraphrase_mean': audit.paraphrase_mean,
              'verdict': audit.verdict}],
            ['backend_id', 'dimension', 'max_tokens', 'trials', 'seed',
             'mean', 'std', 'paraphrase_mean', 'verdict'],
            'suitability.csv')
        self.plotter.histogram(
            'random_similarity.svg',
            {'random pairings': auditor.random_similarities},
            'Similarity of random text pairings', 'similarity', bins=30)
        self._write_manifest()
        return profile

    def serve(self, host, port):
        ''' runs the scoring service until interrupted'''
        from api.server import create_app

        self._write_manifest()
        app = create_app(build_scoring_service(self.run_config,
                                               self.embedder))
        app.run(host=host, port=port, threaded=True)
