"""Test cli modules."""
from click.testing import CliRunner
import os
import json

from ladybug.futil import nukedir

from elva_pricing.cli import elva
from elva_pricing.cli.price import price
from elva_pricing.cli.validate import validate
from elva_pricing.cli.region import region
from elva_pricing.cli.sweep import sweep
from elva_pricing.cli.table import table
from elva_pricing.cli.setconfig import set_config
from elva_pricing.config import folders

SMALL = './tests/assets/json/small_experiment.json'
INVALID = './tests/assets/json/invalid_experiment.json'
BROKEN = './tests/assets/json/broken_experiment.json'


def test_validate():
    """Test the CLI validation of experiment configurations."""
    runner = CliRunner()
    result = runner.invoke(validate, [SMALL])
    assert result.exit_code == 0
    assert result.output.strip() == 'ok'

    result = runner.invoke(validate, [INVALID])
    assert result.exit_code == 2
    fields = [line.split(':')[0] for line in result.output.strip().split('\n')]
    assert 'contract' in fields
    assert 'method' in fields

    result = runner.invoke(validate, [BROKEN])
    assert result.exit_code == 2
    assert 'line 4' in result.output


def test_price():
    """Test the CLI pricing of an experiment."""
    runner = CliRunner()
    folder = './tests/assets/cli_price'
    output_file = os.path.join(folder, 'records.json')
    result = runner.invoke(price, [SMALL, '--out', folder, '--method', 'hybrid',
                                   '--output-file', output_file])
    assert result.exit_code == 0
    with open(output_file) as inf:
        data = json.load(inf)
    assert data['records'][0]['method'] == 'hybrid'
    assert 'agreement' not in data
    assert os.path.isfile(os.path.join(folder, 'result.json'))
    nukedir(folder, True)

    result = runner.invoke(price, [INVALID, '--out', folder])
    assert result.exit_code == 2
    result = runner.invoke(price, [SMALL, '--out', folder, '--preset', 'E'])
    assert result.exit_code == 2
    nukedir(folder, True)


def test_sweep():
    """Test the CLI sweep of an experiment."""
    runner = CliRunner()
    folder = './tests/assets/cli_sweep'
    result = runner.invoke(sweep, [SMALL, '-o', folder, '-m', 'hybrid', '-t', '2'])
    assert result.exit_code == 0
    assert os.path.isfile(os.path.join(folder, 'sweep.csv'))
    nukedir(folder, True)


def test_region():
    """Test the CLI export of exercise regions."""
    runner = CliRunner()
    folder = './tests/assets/cli_region'
    result = runner.invoke(region, [SMALL, '-a', '1', '-o', folder])
    assert result.exit_code == 0
    assert os.path.isfile(os.path.join(folder, 'region_m1.csv'))
    assert not os.path.isfile(os.path.join(folder, 'region_m2.csv'))
    nukedir(folder, True)

    result = runner.invoke(region, [SMALL, '-a', '3', '-o', folder])
    assert result.exit_code == 2
    nukedir(folder, True)


def test_config():
    """Test the CLI output of the configuration."""
    runner = CliRunner()
    result = runner.invoke(elva, ['config'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['max_tree_steps'] > 0
    assert 'output_folder' in data


def test_table():
    """Test the CLI premium table with a replaced model."""
    runner = CliRunner()
    folder = './tests/assets/cli_table'
    result = runner.invoke(table, [SMALL, '--model', 'vg', '-m', 'hybrid',
                                   '-o', folder])
    assert result.exit_code == 0
    assert os.path.isfile(os.path.join(folder, 'table.csv'))
    nukedir(folder, True)

    result = runner.invoke(table, [SMALL, '--model', 'heston', '-o', folder])
    assert result.exit_code == 2
    nukedir(folder, True)


def test_set_config():
    """Test the CLI setting and resetting of a configuration limit."""
    runner = CliRunner()
    result = runner.invoke(set_config, ['max-grid-points', '500000'])
    assert result.exit_code == 0
    with open(folders.config_file) as inf:
        assert json.load(inf)['max_grid_points'] == 500000
    result = runner.invoke(set_config, ['max-grid-points'])
    assert result.exit_code == 0
    with open(folders.config_file) as inf:
        assert json.load(inf)['max_grid_points'] == ''


def test_mortality_help():
    """Test that the help of the commands explains the mortality requirement."""
    runner = CliRunner()
    for command in (validate, price):
        result = runner.invoke(command, ['--help'])
        assert result.exit_code == 0
        assert 'mortality' in result.output
        assert '"default"' in result.output
