# coding=utf-8
"""Prices and result records produced by the pricers."""
from __future__ import division

import csv
import json
import os

from ladybug.futil import preparedir

try:
    from importlib.metadata import version as _dist_version, PackageNotFoundError
except ImportError:  # python < 3.8
    _dist_version, PackageNotFoundError = None, Exception


def engine_version():
    """Get the installed version of elva-pricing."""
    if _dist_version is None:
        return 'dev'
    try:
        return _dist_version('elva-pricing')
    except PackageNotFoundError:
        return 'dev'


class PriceResult(object):
    """Price of a contract computed by one of the pricers.

    Args:
        value: A number for the price.
        method: Text for the pricer (hybrid or lsmc).
        mode: Text for the surrender mode (surrender or no_surrender) or
            premium when the value is a surrender premium.
        std_error: An optional number for the Monte Carlo standard error.
        ci: An optional tuple with the bounds of the 99% confidence interval.
        runtime: An optional number for the wall-clock seconds of the computation.
        metadata: An optional dictionary with details of the computation.

    Properties:
        * value
        * method
        * mode
        * std_error
        * ci
        * runtime
        * metadata
    """
    __slots__ = ('_value', '_method', '_mode', '_std_error', '_ci', '_runtime',
                 '_metadata')
    METHODS = ('hybrid', 'lsmc')
    MODES = ('surrender', 'no_surrender', 'premium')

    def __init__(self, value, method, mode='surrender', std_error=None, ci=None,
                 runtime=None, metadata=None):
        """Initialize PriceResult."""
        assert method in self.METHODS, 'PriceResult method "{}" is not one of ' \
            '{}.'.format(method, self.METHODS)
        assert mode in self.MODES, 'PriceResult mode "{}" is not one of ' \
            '{}.'.format(mode, self.MODES)
        self._value = float(value)
        self._method = method
        self._mode = mode
        self._std_error = None if std_error is None else float(std_error)
        self._ci = None if ci is None else (float(ci[0]), float(ci[1]))
        self._runtime = None if runtime is None else float(runtime)
        self._metadata = metadata if metadata is not None else {}

    @property
    def value(self):
        """Get the price."""
        return self._value

    @property
    def method(self):
        """Get the pricer name."""
        return self._method

    @property
    def mode(self):
        """Get the surrender mode."""
        return self._mode

    @property
    def std_error(self):
        """Get the Monte Carlo standard error or None."""
        return self._std_error

    @property
    def ci(self):
        """Get the 99% confidence interval or None."""
        return self._ci

    @property
    def runtime(self):
        """Get the wall-clock seconds of the computation or None."""
        return self._runtime

    @property
    def metadata(self):
        """Get a dictionary with details of the computation."""
        return self._metadata

    @classmethod
    def from_dict(cls, data):
        """Create a PriceResult from a dictionary."""
        assert data['type'] == 'PriceResult', \
            'Expected PriceResult. Got {}.'.format(data['type'])
        std = data['std_error'] if 'std_error' in data else None
        ci = data['ci'] if 'ci' in data else None
        runtime = data['runtime'] if 'runtime' in data else None
        meta = data['metadata'] if 'metadata' in data else None
        return cls(data['value'], data['method'], data['mode'], std, ci, runtime, meta)

    def to_dict(self):
        """PriceResult dictionary representation."""
        base = {
            'type': 'PriceResult',
            'value': self.value,
            'method': self.method,
            'mode': self.mode
        }
        if self.std_error is not None:
            base['std_error'] = self.std_error
        if self.ci is not None:
            base['ci'] = list(self.ci)
        if self.runtime is not None:
            base['runtime'] = self.runtime
        if self.metadata:
            base['metadata'] = self.metadata
        return base

    def __repr__(self):
        return 'PriceResult: [{} {}] {}'.format(self.method, self.mode, self.value)


class ResultRecord(object):
    """Surrender premium of one pricing run with a full echo of its inputs.

    Args:
        inputs: A dictionary of the experiment inputs.
        surrender: A PriceResult of the contract with optimal surrender.
        no_surrender: A PriceResult of the contract without surrender.
        premium_ci: An optional tuple with the 99% confidence interval of the
            premium (lsmc only).
        runtime: An optional number for the wall-clock seconds of the run.
        seed: An optional integer for the Monte Carlo seed.
        version: Text for the engine version. If None, the installed version
            is used. (Default: None).

    Properties:
        * inputs
        * method
        * price_surrender
        * price_no_surrender
        * premium
        * premium_ci
        * runtime
        * seed
        * version
    """
    __slots__ = ('_inputs', '_surrender', '_no_surrender', '_premium_ci',
                 '_runtime', '_seed', '_version')

    def __init__(self, inputs, surrender, no_surrender, premium_ci=None, runtime=None,
                 seed=None, version=None):
        """Initialize ResultRecord."""
        assert surrender.method == no_surrender.method, 'Both prices of a ' \
            'ResultRecord must come from the same method.'
        self._inputs = inputs
        self._surrender = surrender
        self._no_surrender = no_surrender
        self._premium_ci = None if premium_ci is None else \
            (float(premium_ci[0]), float(premium_ci[1]))
        self._runtime = runtime
        self._seed = seed
        self._version = engine_version() if version is None else version

    @property
    def inputs(self):
        """Get the dictionary of the experiment inputs."""
        return self._inputs

    @property
    def method(self):
        """Get the pricer name."""
        return self._surrender.method

    @property
    def surrender(self):
        """Get the PriceResult with optimal surrender."""
        return self._surrender

    @property
    def no_surrender(self):
        """Get the PriceResult without surrender."""
        return self._no_surrender

    @property
    def price_surrender(self):
        """Get the price with optimal surrender."""
        return self._surrender.value

    @property
    def price_no_surrender(self):
        """Get the price without surrender."""
        return self._no_surrender.value

    @property
    def premium(self):
        """Get the surrender premium."""
        return self._surrender.value - self._no_surrender.value

    @property
    def premium_ci(self):
        """Get the 99% confidence interval of the premium or None."""
        return self._premium_ci

    @property
    def runtime(self):
        """Get the wall-clock seconds of the run."""
        return self._runtime

    @property
    def seed(self):
        """Get the Monte Carlo seed or None."""
        return self._seed

    @property
    def version(self):
        """Get the engine version."""
        return self._version

    def contains(self, value):
        """Get a boolean for whether a value lies in the premium confidence interval.
        """
        if self._premium_ci is None:
            return False
        return self._premium_ci[0] <= value <= self._premium_ci[1]

    @classmethod
    def from_dict(cls, data):
        """Create a ResultRecord from a dictionary."""
        assert data['type'] == 'ResultRecord', \
            'Expected ResultRecord. Got {}.'.format(data['type'])
        sur = PriceResult.from_dict(data['surrender'])
        no_sur = PriceResult.from_dict(data['no_surrender'])
        ci = data['premium_ci'] if 'premium_ci' in data else None
        runtime = data['runtime'] if 'runtime' in data else None
        seed = data['seed'] if 'seed' in data else None
        ver = data['version'] if 'version' in data else None
        return cls(data['inputs'], sur, no_sur, ci, runtime, seed, ver)

    def to_dict(self):
        """ResultRecord dictionary representation."""
        return {
            'type': 'ResultRecord',
            'method': self.method,
            'inputs': self.inputs,
            'price_surrender': self.price_surrender,
            'price_no_surrender': self.price_no_surrender,
            'premium': self.premium,
            'premium_ci': None if self.premium_ci is None else list(self.premium_ci),
            'runtime': self.runtime,
            'seed': self.seed,
            'version': self.version,
            'surrender': self._surrender.to_dict(),
            'no_surrender': self._no_surrender.to_dict()
        }

    def __repr__(self):
        return 'ResultRecord: [{}] premium {}'.format(self.method, self.premium)


def records_to_dict(records, agreement=None):
    """Get a dictionary of several ResultRecords and the optional agreement flag."""
    data = {'records': [rec.to_dict() for rec in records]}
    if agreement is not None:
        data['agreement'] = agreement
    return data


def write_json(data, file_path):
    """Write a dictionary to a JSON file, creating the folder if needed."""
    preparedir(os.path.dirname(os.path.abspath(file_path)), remove_content=False)
    with open(file_path, 'w') as outf:
        json.dump(data, outf, indent=4)
    return file_path


def format_cell(value):
    """Format a value for a CSV table with 17 significant digits for floats."""
    if isinstance(value, float):
        return '{:.17g}'.format(value)
    return '' if value is None else str(value)


def write_csv(header, rows, file_path):
    """Write rows of values to a CSV file with a header row.

    Args:
        header: A list of text for the column names.
        rows: A list of lists of values.
        file_path: The path of the CSV file to write.
    """
    preparedir(os.path.dirname(os.path.abspath(file_path)), remove_content=False)
    with open(file_path, 'w', newline='') as outf:
        writer = csv.writer(outf)
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
    return file_path
