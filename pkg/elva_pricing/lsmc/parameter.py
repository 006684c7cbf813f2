# coding=utf-8
"""Numerical settings of the least squares Monte Carlo pricer."""
from __future__ import division

from fairyfly._lockable import lockable
from fairyfly.typing import float_in_range, int_positive


@lockable
class LsmcConfig(object):
    """Numerical settings of the least squares Monte Carlo pricer.

    Args:
        n_paths: A positive integer for the number of simulated paths.
            (Default: 250000).
        seed: A non-negative integer for the master seed of the random
            streams. (Default: 0).
        out_of_sample: Boolean to note whether the price is computed on a fresh
            set of paths instead of the paths used to fit the stopping rule.
            (Default: False).
        degree_cap: An integer for the highest total degree of the regression
            polynomials. (Default: 8).
        max_share: A number between 0 and 1 for the largest share of the
            points that a regression sector can hold before it is split.
            (Default: 0.2).
        n_pricing_paths: An optional integer for the number of fresh paths that
            price the contract when out_of_sample is True. If None, it is
            n_paths. (Default: None).

    Properties:
        * n_paths
        * seed
        * out_of_sample
        * degree_cap
        * max_share
        * n_pricing_paths
    """
    __slots__ = ('_n_paths', '_seed', '_out_of_sample', '_degree_cap', '_max_share',
                 '_n_pricing_paths', '_locked')

    def __init__(self, n_paths=250000, seed=0, out_of_sample=False, degree_cap=8,
                 max_share=0.2, n_pricing_paths=None):
        """Initialize LsmcConfig."""
        self._locked = False
        self.n_paths = n_paths
        self.seed = seed
        self.out_of_sample = out_of_sample
        self.degree_cap = degree_cap
        self.max_share = max_share
        self.n_pricing_paths = n_pricing_paths

    @property
    def n_paths(self):
        """Get or set a positive integer for the number of simulated paths."""
        return self._n_paths

    @n_paths.setter
    def n_paths(self, value):
        self._n_paths = int_positive(value, 'lsmc number of paths')
        assert self._n_paths >= 2, 'Lsmc number of paths must be at least 2.'

    @property
    def seed(self):
        """Get or set a non-negative integer for the master seed."""
        return self._seed

    @seed.setter
    def seed(self, value):
        self._seed = int_positive(value, 'lsmc seed')

    @property
    def out_of_sample(self):
        """Get or set a boolean for whether the price uses fresh paths."""
        return self._out_of_sample

    @out_of_sample.setter
    def out_of_sample(self, value):
        self._out_of_sample = bool(value)

    @property
    def degree_cap(self):
        """Get or set an integer for the highest total degree of the regressions."""
        return self._degree_cap

    @degree_cap.setter
    def degree_cap(self, value):
        self._degree_cap = int_positive(value, 'lsmc degree cap')

    @property
    def max_share(self):
        """Get or set a number for the largest share of points in a sector."""
        return self._max_share

    @max_share.setter
    def max_share(self, value):
        self._max_share = float_in_range(value, 0, 1, 'lsmc sector share')
        assert self._max_share > 0, 'Lsmc sector share must be greater than 0.'

    @property
    def n_pricing_paths(self):
        """Get or set the number of fresh pricing paths. None means n_paths."""
        return self._n_pricing_paths

    @n_pricing_paths.setter
    def n_pricing_paths(self, value):
        if value is not None:
            value = int_positive(value, 'lsmc number of pricing paths')
            assert value >= 2, 'Lsmc number of pricing paths must be at least 2.'
        self._n_pricing_paths = value

    @property
    def pricing_paths(self):
        """Get the number of paths that price the contract out of sample."""
        return self._n_pricing_paths if self._n_pricing_paths is not None \
            else self._n_paths

    @classmethod
    def from_dict(cls, data):
        """Create a LsmcConfig from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": 'LsmcConfig',
            "n_paths": 250000,
            "seed": 0,
            "out_of_sample": False,
            "degree_cap": 8,
            "max_share": 0.2,
            "n_pricing_paths": None
            }
        """
        assert data['type'] == 'LsmcConfig', \
            'Expected LsmcConfig. Got {}.'.format(data['type'])
        n_paths = data['n_paths'] if 'n_paths' in data else 250000
        seed = data['seed'] if 'seed' in data else 0
        oos = data['out_of_sample'] if 'out_of_sample' in data else False
        cap = data['degree_cap'] if 'degree_cap' in data else 8
        share = data['max_share'] if 'max_share' in data else 0.2
        pricing = data['n_pricing_paths'] if 'n_pricing_paths' in data else None
        return cls(n_paths, seed, oos, cap, share, pricing)

    def to_dict(self):
        """LsmcConfig dictionary representation."""
        return {
            'type': 'LsmcConfig',
            'n_paths': self.n_paths,
            'seed': self.seed,
            'out_of_sample': self.out_of_sample,
            'degree_cap': self.degree_cap,
            'max_share': self.max_share,
            'n_pricing_paths': self.n_pricing_paths
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return LsmcConfig(self._n_paths, self._seed, self._out_of_sample,
                          self._degree_cap, self._max_share,
                          self._n_pricing_paths)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self._n_paths, self._seed, self._out_of_sample, self._degree_cap,
                self._max_share, self._n_pricing_paths)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, LsmcConfig) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'LsmcConfig: [paths: {}] [seed: {}]'.format(self.n_paths, self.seed)
