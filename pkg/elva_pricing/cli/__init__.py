"""elva-pricing commands for pricing ELVA contracts with optimal surrender."""
import click
import sys
import logging
import json

from ..config import folders
from .setconfig import set_config
from .price import price
from .sweep import sweep
from .region import region
from .validate import validate
from .table import table

_logger = logging.getLogger(__name__)


# command group for all elva-pricing commands.
@click.group(help='elva-pricing commands.')
@click.version_option()
def elva():
    pass


@elva.command('config')
@click.option('--output-file', help='Optional file to output the JSON string of '
              'the config object. By default, it will be printed out to stdout',
              type=click.File('w'), default='-', show_default=True)
def config(output_file):
    """Get a JSON object with all configuration information"""
    try:
        config_dict = {
            'output_folder': folders.output_folder,
            'elva_lib_path': folders.elva_lib_path,
            'user_preset_folder': folders.user_preset_folder,
            'user_model_folder': folders.user_model_folder,
            'user_mortality_folder': folders.user_mortality_folder,
            'max_tree_steps': folders.max_tree_steps,
            'max_grid_points': folders.max_grid_points
        }
        output_file.write(json.dumps(config_dict, indent=4))
    except Exception as e:
        _logger.exception('Failed to retrieve configurations.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)


# add sub-commands to elva
elva.add_command(set_config, name='set-config')
elva.add_command(price)
elva.add_command(sweep)
elva.add_command(region)
elva.add_command(validate)
elva.add_command(table)
