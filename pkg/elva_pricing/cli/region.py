"""Elva exercise region commands."""
import click
import sys
import logging

from ladybug.commandutil import process_content_to_output
from elva_pricing.experiment import load_experiment, ConfigValidationError
from elva_pricing.run import emit_exercise_region, output_folder

_logger = logging.getLogger(__name__)


@click.command('region')
@click.argument('config-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--anniversary', '-a', help='An anniversary at which the exercise '
              'region is exported. This option can be repeated. If unspecified, '
              'the regions of the config file are used.', type=int, multiple=True)
@click.option('--preset', '-p', help='Optional name of a numerical preset that '
              'replaces the numerics of the config file.', type=str, default=None)
@click.option('--out', '-o', help='Folder into which the region files are written. '
              'If unspecified, the output of the config file or the configured '
              'output folder is used.', default=None,
              type=click.Path(file_okay=False, dir_okay=True, resolve_path=True))
@click.option('--threads', '-t', help='Number of worker threads.',
              type=click.IntRange(min=1), default=1, show_default=True)
@click.option('--log-file', '-log', help='Optional log file to output the paths of '
              'the region files. By default they will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def region(config_file, anniversary, preset, out, threads, log_file):
    """Export the optimal surrender region of the hybrid pricer at anniversaries.

    One region_m<m>.csv file of (F, r, surrender_optimal) rows is written per
    anniversary.

    \b
    Args:
        config_file: Full path to an experiment configuration JSON file.
    """
    try:
        config = load_experiment(config_file, preset, 'hybrid')
        anniversaries = list(anniversary) or list(config.regions)
        if not anniversaries:
            raise ConfigValidationError(['regions: no anniversary was requested.'])
        bad = [m for m in anniversaries if not 1 <= m < config.contract.maturity]
        if bad:
            raise ConfigValidationError(
                ['regions: anniversary {} is outside 1 to {}.'.format(
                    m, config.contract.maturity - 1) for m in bad])
    except ConfigValidationError as e:
        _logger.exception('Region configuration is invalid.\n{}'.format(e))
        sys.exit(2)
    try:
        files = emit_exercise_region(
            config, anniversaries, output_folder(config, out), threads)
        process_content_to_output('\n'.join(files), log_file)
    except Exception as e:
        _logger.exception('Exercise region export failed.\n{}'.format(e))
        sys.exit(3)
    else:
        sys.exit(0)
