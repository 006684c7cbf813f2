"""Elva premium table commands."""
import click
import sys
import os
import logging

from ladybug.commandutil import process_content_to_output
from elva_pricing.experiment import load_experiment, ConfigValidationError
from elva_pricing.lib.models import model_by_name, MODELS
from elva_pricing.run import run_table, write_table, output_folder
from .price import experiment_options

_logger = logging.getLogger(__name__)


@click.command('table')
@click.argument('config-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--model', help='Optional name of a library Levy model that replaces '
              'the model of the config file. Built-in models are {}.'.format(
                  ', '.join(MODELS)), type=str, default=None)
@experiment_options
@click.option('--log-file', '-log', help='Optional log file to output the path of '
              'the table CSV file. By default it will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def table(config_file, model, preset, method, seed, out, threads, log_file):
    """Price the premium table over floors of 1% and 3% and caps of 5%, 15% and 30%.

    The table is written to table.csv in the output folder.

    \b
    Args:
        config_file: Full path to an experiment configuration JSON file.
    """
    try:
        config = load_experiment(config_file, preset, method, seed)
        if model is not None:
            try:
                config = config.with_model(model_by_name(model))
            except ValueError as e:
                raise ConfigValidationError(['model: {}'.format(e)])
    except ConfigValidationError as e:
        _logger.exception('Table configuration is invalid.\n{}'.format(e))
        sys.exit(2)
    try:
        rows = run_table(config, threads)
        csv_file = write_table(rows, os.path.join(output_folder(config, out),
                                                  'table.csv'))
        process_content_to_output(csv_file, log_file)
    except Exception as e:
        _logger.exception('Premium table failed.\n{}'.format(e))
        sys.exit(3)
    else:
        sys.exit(0)
