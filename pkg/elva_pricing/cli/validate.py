"""Elva configuration validation commands."""
import click
import sys
import logging

from elva_pricing.experiment import load_config_file, validate_config

_logger = logging.getLogger(__name__)


@click.command('validate')
@click.argument('config-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--output-file', '-f', help='Optional file to output the validation '
              'report. By default, it will be printed out to stdout.',
              type=click.File('w'), default='-', show_default=True)
def validate(config_file, output_file):
    """Check every field of an experiment configuration without pricing anything.

    The report is "ok" or one "field: message" line per violation. A contract
    with a maturity above 1 year needs a mortality key, which is either the
    keyword "default" for the bundled table or the path to a CSV table.

    \b
    Args:
        config_file: Full path to an experiment configuration JSON file.
    """
    try:
        violations = validate_config(load_config_file(config_file))
    except ValueError as e:
        violations = [str(e)]
    except Exception as e:
        _logger.exception('Configuration validation failed.\n{}'.format(e))
        sys.exit(3)
    if violations:
        output_file.write('\n'.join(violations) + '\n')
        sys.exit(2)
    output_file.write('ok\n')
    sys.exit(0)
