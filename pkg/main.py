"""
This script creates CLI to run the NOIR toolkit

Command to run this script:

$python3 main.py score --text a.txt --summary b.txt --embedder file:vec.tsv
$python3 main.py batch --corpus corpus.jsonl --embedder http://host:8000
$python3 main.py analyze --true output/scored.csv --null output/null_scored.csv
$python3 main.py expcos-fit --floor 0.2

For more help: python3 main.py -h
"""

import argparse
import logging
import sys

from analysis.percentile_bundle import HUMAN_EVALUATION_PERCENTILES
from analysis.power_sweep import default_p_grid
from analysis.ratio_bins import HALVING_BINS, HUMAN_EVALUATION_BINS, \
    parse_bins
from config.run_config import RunConfig
from error.noir_error import IncorrectInputError, NoirError
from noir_pipeline import NoirPipeline

LOGGER = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def get_parser():
    """This method implements Command Line Interface"""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='key = value settings file')
    common.add_argument('--embedder',
                        help='file:<tsv>, http(s)://<url> or local:<model>')
    common.add_argument('--tokens', choices=['bpe', 'whitespace', 'chars4'])
    common.add_argument('--vocab', help='BPE merges file')
    common.add_argument('--epsilon-d', type=float)
    common.add_argument('--m-cap', type=float)
    common.add_argument('--seed', type=int)
    common.add_argument('--out', help='output directory')
    common.add_argument('--max-tokens', type=int)
    common.add_argument('--max-in-flight', type=int)

    parser = argparse.ArgumentParser(
        description='Score and analyze summaries with NOIR')
    commands = parser.add_subparsers(dest='command', required=True)

    score = commands.add_parser('score', parents=[common],
                                help='score one text/summary pair')
    score.add_argument('--text', required=True)
    score.add_argument('--summary', required=True)

    batch = commands.add_parser('batch', parents=[common],
                                help='score every summary of a corpus')
    batch.add_argument('--corpus')
    batch.add_argument('--root-relative', action='store_true',
                       help='score every level against the original text')

    nullbase = commands.add_parser('nullbase', parents=[common],
                                   help='score random foreign summaries')
    nullbase.add_argument('--corpus')
    nullbase.add_argument('--trials', type=int)

    analyze = commands.add_parser('analyze', parents=[common],
                                  help='distribution and trend report')
    analyze.add_argument('--true', dest='true_table', required=True)
    analyze.add_argument('--null', dest='null_table')
    analyze.add_argument('--compare', dest='compare_table',
                         help='scored table from another embedder')
    analyze.add_argument('--bins', type=int, default=40)

    sweep = commands.add_parser('sweep-p', parents=[common],
                                help='separation against numerator power')
    sweep.add_argument('--true', dest='true_table', required=True)
    sweep.add_argument('--null', dest='null_table', required=True)
    sweep.add_argument('--p-step', type=float, default=0.1)

    corr_length = commands.add_parser(
        'corr-length', parents=[common],
        help='correlate embedding dimensions with length')
    corr_length.add_argument('--corpus')
    corr_length.add_argument('--raw-lengths', action='store_true',
                             help='skip normalizing by the original length')
    corr_length.add_argument('--pca', type=int, default=0)

    expcos = commands.add_parser('expcos-fit', parents=[common],
                                 help='fit exp(-beta x) to cos(sqrt(x))')
    expcos.add_argument('--floor', type=float, default=0.2)
    expcos.add_argument('--grid', type=int, default=1000)

    curve = commands.add_parser('curve', parents=[common],
                                help='mean similarity per compression bin')
    curve.add_argument('--table', required=True)
    curve.add_argument('--bins', help='lo:hi,lo:hi,...')
    curve.add_argument('--noir', type=float,
                       help='overlay the similarity this NOIR predicts')

    bundle = commands.add_parser('bundle', parents=[common],
                                 help='select pairs for human ranking')
    bundle.add_argument('--table', required=True)
    bundle.add_argument('--bins', help='lo:hi,lo:hi,...')
    bundle.add_argument('--percentiles', help='comma-separated, 0 to 100')
    bundle.add_argument('--human-ranks', help='CSV with columns item,rank')

    audit = commands.add_parser('audit-embedder', parents=[common],
                                help='check random pairings score near 0')
    audit.add_argument('--corpus')
    audit.add_argument('--trials', type=int)
    audit.add_argument('--paraphrases', help='paraphrase corpus')
    audit.add_argument('--max-random-mean', type=float)

    serve = commands.add_parser('serve', parents=[common],
                                help='run the scoring service')
    serve.add_argument('--host', default='0.0.0.0')
    serve.add_argument('--port', type=int, default=8080)
    serve.add_argument('--threshold', type=float)
    serve.add_argument('--max-keep', type=int)

    return parser


def run_command(argv, stdout=None):
    ''' runs one subcommand, returns the process exit status'''
    stdout = stdout or sys.stdout
    try:
        args = get_parser().parse_args(argv)
    except SystemExit as exit_request:
        return exit_request.code

    try:
        run_config = RunConfig.resolve(vars(args), args.config)
        pipeline = NoirPipeline(run_config, args.command)
        _dispatch(pipeline, args, stdout)
    except NoirError as err:
        LOGGER.error(err.message)
        print('error: ' + err.message, file=sys.stderr)
        return EXIT_FAILURE
    except (IOError, OSError) as err:
        LOGGER.error(err)
        print('error: {}'.format(err), file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_SUCCESS


def _dispatch(pipeline, args, stdout):
    command = args.command
    if command == 'score':
        pipeline.score(args.text, args.summary, stdout)
    elif command == 'batch':
        pipeline.batch(args.root_relative)
    elif command == 'nullbase':
        pipeline.nullbase()
    elif command == 'analyze':
        pipeline.analyze(args.true_table, args.null_table, args.bins,
                         args.compare_table)
    elif command == 'sweep-p':
        pipeline.sweep_p(args.true_table, args.null_table,
                         default_p_grid(args.p_step))
    elif command == 'corr-length':
        pipeline.corr_length(not args.raw_lengths, args.pca)
    elif command == 'expcos-fit':
        beta, rms = pipeline.expcos_fit(args.floor, args.grid)
        print('beta {:.4f} rms {:.4g}'.format(beta, rms), file=stdout)
    elif command == 'curve':
        pipeline.curve(args.table, _bins(args.bins, HALVING_BINS),
                       args.noir)
    elif command == 'bundle':
        _, rank_correlation = pipeline.bundle(
            args.table, _bins(args.bins, HUMAN_EVALUATION_BINS),
            _percentiles(args.percentiles), args.human_ranks)
        if rank_correlation is not None:
            print('spearman {:.4f}'.format(rank_correlation), file=stdout)
    elif command == 'audit-embedder':
        profile = pipeline.audit_embedder(args.paraphrases,
                                          args.max_random_mean)
        print('{} {}'.format(profile.backend_id, profile.suitability.verdict),
              file=stdout)
    elif command == 'serve':
        pipeline.serve(args.host, args.port)


def _bins(bins_string, default_bins):
    return parse_bins(bins_string) if bins_string else default_bins


def _percentiles(percentiles_string):
    if not percentiles_string:
        return HUMAN_EVALUATION_PERCENTILES
    try:
        return [float(value) for value in percentiles_string.split(',')]
    except ValueError:
        raise IncorrectInputError(
            'Percentiles must be comma-separated numbers')


if __name__ == '__main__':
    sys.exit(run_command(sys.argv[1:]))
