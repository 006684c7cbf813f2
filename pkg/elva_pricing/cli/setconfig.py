"""Commands to set elva-pricing configurations."""
import click
import sys
import logging
import json

from elva_pricing.config import folders

_logger = logging.getLogger(__name__)


@click.group(help='Commands to set elva-pricing configurations.')
def set_config():
    pass


@set_config.command('output-folder')
@click.argument('folder-path', required=False, type=click.Path(
    file_okay=False, dir_okay=True, resolve_path=True))
def output_folder(folder_path):
    """Set the output-folder configuration variable.

    \b
    Args:
        folder_path: Path to a folder to be set as the output-folder.
            If unspecified, the output-folder will be set back to the default.
    """
    _set_config_variable(folder_path, 'output_folder')


@set_config.command('elva-lib-path')
@click.argument('folder-path', required=False, type=click.Path(
    exists=True, file_okay=False, dir_okay=True, resolve_path=True))
def elva_lib_path(folder_path):
    """Set the elva-lib-path configuration variable.

    \b
    Args:
        folder_path: Path to a folder to be set as the elva-lib-path.
            If unspecified, the elva-lib-path will be set back to the default.
    """
    _set_config_variable(folder_path, 'elva_lib_path')


@set_config.command('max-tree-steps')
@click.argument('value', required=False, type=click.IntRange(min=1))
def max_tree_steps(value):
    """Set the max-tree-steps configuration variable.

    \b
    Args:
        value: The largest number of short rate tree steps of a pricing run.
            If unspecified, it will be set back to the default.
    """
    _set_config_variable(value, 'max_tree_steps')


@set_config.command('max-grid-points')
@click.argument('value', required=False, type=click.IntRange(min=3))
def max_grid_points(value):
    """Set the max-grid-points configuration variable.

    \b
    Args:
        value: The largest number of log-price grid nodes of a pricing run.
            If unspecified, it will be set back to the default.
    """
    _set_config_variable(value, 'max_grid_points')


def _set_config_variable(value, variable_name):
    var_cli_name = variable_name.replace('_', '-')
    try:
        config_file = folders.config_file
        with open(config_file) as inf:
            data = json.load(inf)
        data[variable_name] = value if value is not None else ''
        with open(config_file, 'w') as fp:
            json.dump(data, fp, indent=4)
        msg_end = 'reset to default' if value is None \
            else 'set to: {}'.format(value)
        print('{} successfully {}.'.format(var_cli_name, msg_end))
    except Exception as e:
        _logger.exception('Failed to set {}.\n{}'.format(var_cli_name, e))
        sys.exit(1)
    else:
        sys.exit(0)
