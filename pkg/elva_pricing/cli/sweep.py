"""Elva comparative statics commands."""
import click
import sys
import os
import logging

from ladybug.commandutil import process_content_to_output
from elva_pricing.experiment import load_experiment, ConfigValidationError
from elva_pricing.run import run_sweep, write_sweep, output_folder
from .price import experiment_options

_logger = logging.getLogger(__name__)


@click.command('sweep')
@click.argument('config-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@experiment_options
@click.option('--log-file', '-log', help='Optional log file to output the path of '
              'the sweep CSV file. By default it will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def sweep(config_file, preset, method, seed, out, threads, log_file):
    """Price the surrender premium at every value of the sweep of a config file.

    The premiums are written to sweep.csv in the output folder. Failed points
    are written as rows with an error message.

    \b
    Args:
        config_file: Full path to an experiment configuration JSON file with a
            sweep of one parameter.
    """
    try:
        config = load_experiment(config_file, preset, method, seed)
        if config.sweep is None:
            raise ConfigValidationError(['sweep: required field is missing.'])
    except ConfigValidationError as e:
        _logger.exception('Sweep configuration is invalid.\n{}'.format(e))
        sys.exit(2)
    try:
        rows = run_sweep(config, threads)
        csv_file = write_sweep(rows, os.path.join(output_folder(config, out),
                                                  'sweep.csv'))
        process_content_to_output(csv_file, log_file)
    except Exception as e:
        _logger.exception('Sweep failed.\n{}'.format(e))
        sys.exit(3)
    else:
        sys.exit(0)
