# coding=utf-8
"""Numerical settings shared by both pricers, optionally named after a preset."""
from __future__ import division

from fairyfly._lockable import lockable
from fairyfly.typing import float_positive, int_positive, clean_string

from .hybrid.parameter import HybridConfig
from .lsmc.parameter import LsmcConfig


@lockable
class NumericalConfig(object):
    """Numerical settings of the hybrid and the least squares Monte Carlo pricers.

    Args:
        dy: A positive number for the log-price grid step. (Default: 0.01).
        steps_per_year: A positive integer for the number of time steps per
            year of the hybrid pricer. (Default: 10).
        n_paths: An integer for the number of Monte Carlo paths. (Default: 250000).
        seed: A non-negative integer for the Monte Carlo seed. (Default: 0).
        out_of_sample: Boolean to note whether Monte Carlo prices come from
            fresh paths. (Default: False).
        half_width: A positive number for the log-price grid half width in
            standard deviations. (Default: 6).
        eps: An optional small-jump cutoff. (Default: None).
        bound: An optional large-jump truncation bound. (Default: None).
        n_pricing_paths: An optional integer for the number of fresh Monte Carlo
            paths that price out of sample. If None, it is n_paths.
            (Default: None).
        display_name: Text for the name of the preset. (Default: None).

    Properties:
        * dy
        * steps_per_year
        * n_paths
        * seed
        * out_of_sample
        * half_width
        * eps
        * bound
        * n_pricing_paths
        * display_name
        * hybrid_config
        * lsmc_config
    """
    __slots__ = ('_dy', '_steps_per_year', '_n_paths', '_seed', '_out_of_sample',
                 '_half_width', '_eps', '_bound', '_n_pricing_paths', '_display_name',
                 '_locked')
    KEYS = ('dy', 'steps_per_year', 'n_paths', 'seed', 'out_of_sample',
            'half_width', 'eps', 'bound', 'n_pricing_paths')

    def __init__(self, dy=0.01, steps_per_year=10, n_paths=250000, seed=0,
                 out_of_sample=False, half_width=6, eps=None, bound=None,
                 n_pricing_paths=None, display_name=None):
        """Initialize NumericalConfig."""
        self._locked = False
        self.dy = dy
        self.steps_per_year = steps_per_year
        self.n_paths = n_paths
        self.seed = seed
        self.out_of_sample = out_of_sample
        self.half_width = half_width
        self.eps = eps
        self.bound = bound
        self.n_pricing_paths = n_pricing_paths
        self.display_name = display_name

    @property
    def dy(self):
        """Get or set a positive number for the log-price grid step."""
        return self._dy

    @dy.setter
    def dy(self, value):
        self._dy = float_positive(value, 'numerical dy')
        assert self._dy > 0, 'Numerical dy must be greater than 0.'

    @property
    def steps_per_year(self):
        """Get or set a positive integer for the hybrid time steps per year."""
        return self._steps_per_year

    @steps_per_year.setter
    def steps_per_year(self, value):
        self._steps_per_year = int_positive(value, 'numerical steps per year')
        assert self._steps_per_year >= 1, 'Steps per year must be at least 1.'

    @property
    def n_paths(self):
        """Get or set an integer for the number of Monte Carlo paths."""
        return self._n_paths

    @n_paths.setter
    def n_paths(self, value):
        self._n_paths = int_positive(value, 'numerical number of paths')
        assert self._n_paths >= 2, 'Number of paths must be at least 2.'

    @property
    def seed(self):
        """Get or set a non-negative integer for the Monte Carlo seed."""
        return self._seed

    @seed.setter
    def seed(self, value):
        self._seed = int_positive(value, 'numerical seed')

    @property
    def out_of_sample(self):
        """Get or set a boolean for whether Monte Carlo prices use fresh paths."""
        return self._out_of_sample

    @out_of_sample.setter
    def out_of_sample(self, value):
        self._out_of_sample = bool(value)

    @property
    def half_width(self):
        """Get or set a positive number for the grid half width in standard deviations.
        """
        return self._half_width

    @half_width.setter
    def half_width(self, value):
        self._half_width = float_positive(value, 'numerical half width')
        assert self._half_width > 0, 'Numerical half width must be greater than 0.'

    @property
    def eps(self):
        """Get or set the small-jump cutoff. None means one grid step."""
        return self._eps

    @eps.setter
    def eps(self, value):
        self._eps = None if value is None else float_positive(value, 'numerical eps')

    @property
    def bound(self):
        """Get or set the large-jump truncation bound. None means model-derived."""
        return self._bound

    @bound.setter
    def bound(self, value):
        self._bound = None if value is None else \
            float_positive(value, 'numerical bound')

    @property
    def n_pricing_paths(self):
        """Get or set the number of fresh Monte Carlo pricing paths or None."""
        return self._n_pricing_paths

    @n_pricing_paths.setter
    def n_pricing_paths(self, value):
        if value is not None:
            value = int_positive(value, 'numerical number of pricing paths')
            assert value >= 2, 'Number of pricing paths must be at least 2.'
        self._n_pricing_paths = value

    @property
    def display_name(self):
        """Get or set text for the name of the preset."""
        return self._display_name if self._display_name is not None else 'custom'

    @display_name.setter
    def display_name(self, value):
        if value is not None:
            value = clean_string(str(value), 'numerical preset name')
        self._display_name = value

    @property
    def hybrid_config(self):
        """Get a HybridConfig with the settings of the hybrid pricer."""
        return HybridConfig(self._dy, self._steps_per_year, self._half_width,
                            self._eps, self._bound)

    @property
    def lsmc_config(self):
        """Get a LsmcConfig with the settings of the Monte Carlo pricer."""
        return LsmcConfig(self._n_paths, self._seed, self._out_of_sample,
                          n_pricing_paths=self._n_pricing_paths)

    @classmethod
    def from_dict(cls, data):
        """Create a NumericalConfig from a dictionary.

        A preset key starts from the named preset of the library and the other
        keys override its values.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": 'NumericalConfig',
            "preset": 'B',  # optional name of a library preset
            "dy": 0.01,
            "steps_per_year": 10,
            "n_paths": 250000,
            "seed": 0,
            "out_of_sample": False,
            "half_width": 6,
            "eps": None,
            "bound": None,
            "n_pricing_paths": None
            }
        """
        assert data['type'] == 'NumericalConfig', \
            'Expected NumericalConfig. Got {}.'.format(data['type'])
        if 'preset' in data and data['preset'] is not None:
            from .lib.presets import preset_by_name
            base = preset_by_name(data['preset']).to_dict()
        else:
            base = cls().to_dict()
        for key in cls.KEYS:
            if key in data:
                base[key] = data[key]
        name = data['display_name'] if 'display_name' in data else \
            base.get('display_name')
        return cls(base['dy'], base['steps_per_year'], base['n_paths'], base['seed'],
                   base['out_of_sample'], base['half_width'], base['eps'],
                   base['bound'], base.get('n_pricing_paths'), name)

    def to_dict(self):
        """NumericalConfig dictionary representation."""
        base = {'type': 'NumericalConfig'}
        for key in self.KEYS:
            base[key] = getattr(self, key)
        if self._display_name is not None:
            base['display_name'] = self._display_name
        return base

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return NumericalConfig(
            self._dy, self._steps_per_year, self._n_paths, self._seed,
            self._out_of_sample, self._half_width, self._eps, self._bound,
            self._n_pricing_paths, self._display_name)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return tuple(getattr(self, key) for key in self.KEYS)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, NumericalConfig) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'NumericalConfig: {} [dy: {}] [steps per year: {}] [paths: {}]'.format(
            self.display_name, self.dy, self.steps_per_year, self.n_paths)
