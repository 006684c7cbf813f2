"""Elva pricing commands."""
import click
import sys
import json
import logging

from ladybug.commandutil import process_content_to_output
from elva_pricing.experiment import load_experiment, ConfigValidationError, METHODS
from elva_pricing.lib.presets import PRESETS
from elva_pricing.result import records_to_dict
from elva_pricing.run import run_experiment, write_experiment, output_folder

_logger = logging.getLogger(__name__)


def experiment_options(func):
    """Add the options shared by the commands that run an experiment."""
    options = (
        click.option('--preset', '-p', help='Optional name of a numerical preset '
                     'that replaces the numerics of the config file. Built-in presets '
                     'are {}.'.format(', '.join(PRESETS)), type=str, default=None),
        click.option('--method', '-m', help='Optional pricer that replaces the '
                     'method of the config file.', type=click.Choice(METHODS),
                     default=None),
        click.option('--seed', '-s', help='Optional Monte Carlo seed that replaces '
                     'the seed of the config file.', type=click.IntRange(min=0),
                     default=None),
        click.option('--out', '-o', help='Folder into which the result files are '
                     'written. If unspecified, the output of the config file or the '
                     'configured output folder is used.', default=None,
                     type=click.Path(file_okay=False, dir_okay=True,
                                     resolve_path=True)),
        click.option('--threads', '-t', help='Number of worker threads.',
                     type=click.IntRange(min=1), default=1, show_default=True)
    )
    for option in reversed(options):
        func = option(func)
    return func


@click.command('price')
@click.argument('config-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@experiment_options
@click.option('--output-file', '-f', help='Optional file to output the JSON string '
              'of the result records. By default, it will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def price(config_file, preset, method, seed, out, threads, output_file):
    """Price the surrender premium of an experiment and write result.json.

    The config file must name a mortality table for a maturity above 1 year,
    either the keyword "default" for the bundled table or a CSV path.

    \b
    Args:
        config_file: Full path to an experiment configuration JSON file.
    """
    try:
        config = load_experiment(config_file, preset, method, seed)
    except ConfigValidationError as e:
        _logger.exception('Experiment configuration is invalid.\n{}'.format(e))
        sys.exit(2)
    try:
        records, agreement = run_experiment(config, threads)
        write_experiment(records, agreement, output_folder(config, out))
        process_content_to_output(
            json.dumps(records_to_dict(records, agreement), indent=4), output_file)
    except Exception as e:
        _logger.exception('Experiment pricing failed.\n{}'.format(e))
        sys.exit(3)
    else:
        sys.exit(0)
