# coding=utf-8
"""Experiment configuration read from JSON files by the command line interface."""
from __future__ import division

import json
import os

from .contract import ElvaContract
from .levy.dictutil import dict_to_levy_model
from .parameter import NumericalConfig
from .rate.hullwhite import HullWhiteParams

METHODS = ('hybrid', 'lsmc', 'both')
SWEEP_PARAMETERS = ('c', 'g', 'alpha', 'sigma_HW', 'k_HW', 'alpha_levy')


def _model_from_value(value):
    """Get a Levy model from a dictionary or the name of a library model."""
    if isinstance(value, str):
        from .lib.models import model_by_name
        return model_by_name(value)
    return dict_to_levy_model(value)


class SweepSpec(object):
    """A parameter of an experiment and the values it takes in a sweep.

    Args:
        parameter: Text for the parameter. Choose from c, g, alpha, sigma_HW,
            k_HW, alpha_levy.
        values: A list of numbers for the values of the parameter.

    Properties:
        * parameter
        * values
    """
    __slots__ = ('_parameter', '_values')

    def __init__(self, parameter, values):
        """Initialize SweepSpec."""
        if parameter not in SWEEP_PARAMETERS:
            raise ValueError('Sweep parameter "{}" is not supported. Choose from: '
                             '{}.'.format(parameter, ', '.join(SWEEP_PARAMETERS)))
        try:
            values = tuple(float(v) for v in values)
        except (TypeError, ValueError):
            raise TypeError('Sweep values must be a list of numbers. Got {}.'.format(
                values))
        if len(values) == 0:
            raise ValueError('Sweep values must not be empty.')
        self._parameter, self._values = parameter, values

    @property
    def parameter(self):
        """Get the name of the swept parameter."""
        return self._parameter

    @property
    def values(self):
        """Get a tuple of the values of the parameter."""
        return self._values

    @classmethod
    def from_dict(cls, data):
        """Create a SweepSpec from a dictionary with parameter and values keys."""
        return cls(data['parameter'], data['values'])

    def to_dict(self):
        """SweepSpec dictionary representation."""
        return {'parameter': self.parameter, 'values': list(self.values)}

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        return 'SweepSpec: [{}] {}'.format(self.parameter, list(self.values))


class ExperimentConfig(object):
    """Inputs of a pricing experiment.

    Args:
        model: A Levy model for the fund.
        hull_white: A HullWhiteParams object for the short rate.
        contract: An ElvaContract.
        numerics: A NumericalConfig.
        mortality: Text for the keyword default or the path to a mortality CSV
            file. (Default: default).
        method: Text for the pricer. Choose from hybrid, lsmc, both.
            (Default: hybrid).
        sweep: An optional SweepSpec. (Default: None).
        regions: An optional list of anniversaries for the exercise regions.
        output: An optional path to the folder of the result files.

    Properties:
        * model
        * hull_white
        * contract
        * numerics
        * mortality
        * method
        * sweep
        * regions
        * output
    """
    __slots__ = ('_model', '_hull_white', '_contract', '_numerics', '_mortality',
                 '_method', '_sweep', '_regions', '_output')

    def __init__(self, model, hull_white, contract, numerics, mortality='default',
                 method='hybrid', sweep=None, regions=None, output=None):
        """Initialize ExperimentConfig."""
        self._model, self._hull_white, self._contract = model, hull_white, contract
        self._numerics = numerics
        self.mortality = mortality
        self.method = method
        self._sweep = sweep
        self.regions = regions
        self._output = output

    @property
    def model(self):
        """Get the Levy model."""
        return self._model

    @property
    def hull_white(self):
        """Get the HullWhiteParams."""
        return self._hull_white

    @property
    def contract(self):
        """Get the ElvaContract."""
        return self._contract

    @property
    def numerics(self):
        """Get the NumericalConfig."""
        return self._numerics

    @property
    def mortality(self):
        """Get or set text for the mortality table keyword or file path."""
        return self._mortality

    @mortality.setter
    def mortality(self, value):
        assert isinstance(value, str) and value, 'Mortality must be the keyword ' \
            'default or a path to a mortality file. Got {}.'.format(value)
        self._mortality = value

    @property
    def method(self):
        """Get or set text for the pricer."""
        return self._method

    @method.setter
    def method(self, value):
        if value not in METHODS:
            raise ValueError('Method "{}" is not supported. Choose from: {}.'.format(
                value, ', '.join(METHODS)))
        self._method = value

    @property
    def sweep(self):
        """Get the SweepSpec or None."""
        return self._sweep

    @property
    def regions(self):
        """Get or set a tuple of anniversaries for the exercise regions."""
        return self._regions

    @regions.setter
    def regions(self, value):
        value = () if value is None else tuple(int(m) for m in value)
        for m in value:
            if not 1 <= m < self._contract.maturity:
                raise ValueError('Exercise region anniversary must be between 1 and '
                                 '{}. Got {}.'.format(self._contract.maturity - 1, m))
        self._regions = value

    @property
    def output(self):
        """Get the path to the output folder or None."""
        return self._output

    def load_mortality(self):
        """Get the MortalityTable of the experiment."""
        from .lib.mortality import mortality_by_name
        return mortality_by_name(self._mortality, self._contract.age)

    def with_parameter(self, parameter, value):
        """Get a copy of this experiment with one sweep parameter changed.

        Args:
            parameter: Text for the parameter. Choose from c, g, alpha,
                sigma_HW, k_HW, alpha_levy.
            value: A number for the new value of the parameter.
        """
        model, hw = self._model.duplicate(), self._hull_white.duplicate()
        contract = self._contract.duplicate()
        if parameter == 'c':
            contract.cap_rate = value
        elif parameter == 'g':
            contract.floor_rate = value
        elif parameter == 'alpha':
            contract.fees = value
        elif parameter == 'sigma_HW':
            hw.sigma = value
        elif parameter == 'k_HW':
            hw.k = value
        elif parameter == 'alpha_levy':
            if not hasattr(model, 'alpha'):
                raise ValueError('The {} model has no alpha parameter to '
                                 'sweep.'.format(model.__class__.__name__))
            model.alpha = value
        else:
            raise ValueError('Sweep parameter "{}" is not supported. Choose from: '
                             '{}.'.format(parameter, ', '.join(SWEEP_PARAMETERS)))
        return ExperimentConfig(model, hw, contract, self._numerics, self._mortality,
                                self._method, None, self._regions, self._output)

    def with_numerics(self, numerics):
        """Get a copy of this experiment with other numerical settings."""
        return ExperimentConfig(
            self._model, self._hull_white, self._contract, numerics, self._mortality,
            self._method, self._sweep, self._regions, self._output)

    def with_model(self, model):
        """Get a copy of this experiment with another Levy model."""
        return ExperimentConfig(
            model, self._hull_white, self._contract, self._numerics, self._mortality,
            self._method, self._sweep, self._regions, self._output)

    def with_method(self, method):
        """Get a copy of this experiment with another pricer."""
        return ExperimentConfig(
            self._model, self._hull_white, self._contract, self._numerics,
            self._mortality, method, self._sweep, self._regions, self._output)

    @classmethod
    def from_dict(cls, data):
        """Create an ExperimentConfig from a dictionary.

        Args:
            data: A python dictionary in the following format. The model can
                also be the name of a library model and the hull_white key
                is optional.

        .. code-block:: python

            {
            "type": 'ExperimentConfig',
            "model": {"type": "NIG", "alpha": 6, "beta": -0.4, "delta": 2},
            "hull_white": {"type": "HullWhiteParams", "k": 0.2, "sigma": 0.03,
                           "r0": 0.02},
            "contract": {"type": "ElvaContract", "maturity": 25,
                         "floor_rate": 0.01, "cap_rate": 0.15},
            "mortality": "default",
            "method": "both",
            "numerics": {"type": "NumericalConfig", "preset": "B"},
            "sweep": {"parameter": "c", "values": [0.05, 0.15, 0.3]},
            "regions": [5, 10, 15, 20],
            "output": "./results"
            }
        """
        assert data['type'] == 'ExperimentConfig', \
            'Expected ExperimentConfig. Got {}.'.format(data['type'])
        model = _model_from_value(data['model'])
        hw = HullWhiteParams.from_dict(data['hull_white']) \
            if 'hull_white' in data else HullWhiteParams()
        contract = ElvaContract.from_dict(data['contract'])
        numerics = NumericalConfig.from_dict(data['numerics'])
        mortality = data['mortality'] if 'mortality' in data else 'default'
        method = data['method'] if 'method' in data else 'hybrid'
        sweep = SweepSpec.from_dict(data['sweep']) \
            if 'sweep' in data and data['sweep'] is not None else None
        regions = data['regions'] if 'regions' in data else None
        output = data['output'] if 'output' in data else None
        return cls(model, hw, contract, numerics, mortality, method, sweep, regions,
                   output)

    @classmethod
    def from_file(cls, file_path):
        """Create an ExperimentConfig from a JSON file."""
        return cls.from_dict(load_config_file(file_path))

    def to_dict(self):
        """ExperimentConfig dictionary representation."""
        base = {
            'type': 'ExperimentConfig',
            'model': self.model.to_dict(),
            'hull_white': self.hull_white.to_dict(),
            'contract': self.contract.to_dict(),
            'mortality': self.mortality,
            'method': self.method,
            'numerics': self.numerics.to_dict()
        }
        if self.sweep is not None:
            base['sweep'] = self.sweep.to_dict()
        if self.regions:
            base['regions'] = list(self.regions)
        if self.output is not None:
            base['output'] = self.output
        return base

    def __repr__(self):
        return 'ExperimentConfig: [{}] [{}] [{}]'.format(
            self.model.__class__.__name__, self.method, self.numerics.display_name)


def load_config_file(file_path):
    """Load the dictionary of a JSON configuration file.

    Parse errors are raised as ValueError with the line and the column.
    """
    with open(file_path) as inf:
        text = inf.read()
    try:
        return json.loads(text)
    except ValueError as e:
        line, col = getattr(e, 'lineno', '?'), getattr(e, 'colno', '?')
        raise ValueError('Configuration file "{}" could not be parsed at line {}, '
                         'column {}: {}'.format(file_path, line, col, e))


def _check(violations, field, func, *args):
    """Call func and record any validation failure under a field path."""
    try:
        return func(*args)
    except (AssertionError, ValueError, TypeError, KeyError) as e:
        msg = 'missing key {}'.format(e) if isinstance(e, KeyError) else str(e)
        violations.append('{}: {}'.format(field, msg))
        return None


def validate_config(data):
    """Get the list of violations of an experiment configuration dictionary.

    Args:
        data: A dictionary loaded from an experiment configuration file.

    Returns:
        A list of text violations formatted as "field: message". An empty list
        means that the configuration is valid.
    """
    violations = []
    if not isinstance(data, dict):
        return ['<root>: expected a JSON object. Got {}.'.format(type(data).__name__)]
    if data.get('type') != 'ExperimentConfig':
        violations.append('type: expected ExperimentConfig. Got {}.'.format(
            data.get('type')))
    for key in ('model', 'contract', 'numerics'):
        if key not in data:
            violations.append('{}: required field is missing.'.format(key))

    model = _check(violations, 'model', _model_from_value, data['model']) \
        if 'model' in data else None
    if 'hull_white' in data:
        _check(violations, 'hull_white', HullWhiteParams.from_dict, data['hull_white'])
    contract = _check(violations, 'contract', ElvaContract.from_dict,
                      data['contract']) if 'contract' in data else None
    if 'numerics' in data:
        _check(violations, 'numerics', NumericalConfig.from_dict, data['numerics'])

    method = data.get('method', 'hybrid')
    if method not in METHODS:
        violations.append('method: "{}" is not one of {}.'.format(
            method, ', '.join(METHODS)))

    if 'mortality' not in data:
        if contract is not None and contract.maturity > 1:
            violations.append('mortality: a mortality table is required for a '
                              'maturity of {}. Use "default" for the bundled '
                              'table.'.format(contract.maturity))
    else:
        mort = data['mortality']
        if not isinstance(mort, str) or not mort:
            violations.append('mortality: expected the keyword default or a path.')
        elif mort != 'default':
            if not os.path.isfile(mort):
                from .lib.mortality import mortality_by_name
                _check(violations, 'mortality', mortality_by_name, mort)
            else:
                from .mortality import MortalityTable
                _check(violations, 'mortality', MortalityTable.from_csv, mort)

    if 'regions' in data and data['regions'] and contract is not None:
        for i, m in enumerate(data['regions']):
            if not isinstance(m, int) or not 1 <= m < contract.maturity:
                violations.append('regions[{}]: anniversary must be an integer '
                                  'between 1 and {}. Got {}.'.format(
                                      i, contract.maturity - 1, m))

    if 'sweep' in data and data['sweep'] is not None:
        sweep = _check(violations, 'sweep', SweepSpec.from_dict, data['sweep'])
        if sweep is not None and model is not None and contract is not None:
            base = ExperimentConfig(model, HullWhiteParams(), contract,
                                    NumericalConfig())
            for i, value in enumerate(sweep.values):
                _check(violations, 'sweep.values[{}]'.format(i), base.with_parameter,
                       sweep.parameter, value)
    return violations


class ConfigValidationError(ValueError):
    """Error raised when an experiment configuration violates a domain rule.

    Args:
        violations: A list of text violations formatted as "field: message".
    """

    def __init__(self, violations):
        self.violations = list(violations)
        ValueError.__init__(
            self, 'Invalid experiment configuration:\n{}'.format(
                '\n'.join(self.violations)))


def load_experiment(file_path, preset=None, method=None, seed=None):
    """Load and validate an ExperimentConfig with command line overrides.

    Args:
        file_path: Path to the JSON configuration file.
        preset: Optional name of a library preset that replaces the numerics.
        method: Optional text for the pricer that replaces the method.
        seed: Optional integer that replaces the Monte Carlo seed.

    Returns:
        An ExperimentConfig. A ConfigValidationError is raised if the file
        cannot be parsed or has any violation.
    """
    try:
        data = load_config_file(file_path)
    except ValueError as e:
        raise ConfigValidationError([str(e)])
    if preset is not None or seed is not None:
        numerics = dict(data.get('numerics') or {'type': 'NumericalConfig'})
        if preset is not None:
            for key in NumericalConfig.KEYS:
                if key != 'seed' and key != 'out_of_sample':
                    numerics.pop(key, None)
            numerics['preset'] = preset
        if seed is not None:
            numerics['seed'] = seed
        data['numerics'] = numerics
    if method is not None:
        data['method'] = method
    violations = validate_config(data)
    if violations:
        raise ConfigValidationError(violations)
    return ExperimentConfig.from_dict(data)
