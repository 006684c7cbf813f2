# coding=utf-8
"""Numerical settings of the hybrid tree and finite difference pricer."""
from __future__ import division

from fairyfly._lockable import lockable
from fairyfly.typing import float_positive, int_positive


@lockable
class HybridConfig(object):
    """Numerical settings of the hybrid pricer.

    Args:
        dy: A positive number for the log-price grid step. (Default: 0.01).
        steps_per_year: A positive integer for the number of tree and finite
            difference time steps per year. (Default: 10).
        half_width: A positive number for the grid half width in standard
            deviations of the log fund at maturity. (Default: 6).
        eps: An optional small-jump cutoff that is a multiple of dy. If None,
            it is equal to dy. (Default: None).
        bound: An optional large-jump truncation bound that is a multiple of
            dy. If None, it is derived from the tail of the Levy measure.
            (Default: None).

    Properties:
        * dy
        * steps_per_year
        * dt
        * half_width
        * eps
        * bound
    """
    __slots__ = ('_dy', '_steps_per_year', '_half_width', '_eps', '_bound', '_locked')

    def __init__(self, dy=0.01, steps_per_year=10, half_width=6, eps=None, bound=None):
        """Initialize HybridConfig."""
        self._locked = False
        self.dy = dy
        self.steps_per_year = steps_per_year
        self.half_width = half_width
        self.eps = eps
        self.bound = bound

    @property
    def dy(self):
        """Get or set a positive number for the log-price grid step."""
        return self._dy

    @dy.setter
    def dy(self, value):
        self._dy = float_positive(value, 'hybrid dy')
        assert self._dy > 0, 'Hybrid dy must be greater than 0.'

    @property
    def steps_per_year(self):
        """Get or set a positive integer for the number of time steps per year."""
        return self._steps_per_year

    @steps_per_year.setter
    def steps_per_year(self, value):
        self._steps_per_year = int_positive(value, 'hybrid steps per year')
        assert self._steps_per_year >= 1, 'Hybrid steps per year must be at least 1.'

    @property
    def dt(self):
        """Get the time step in years."""
        return 1.0 / self._steps_per_year

    @property
    def half_width(self):
        """Get or set a positive number for the grid half width in standard deviations.
        """
        return self._half_width

    @half_width.setter
    def half_width(self, value):
        self._half_width = float_positive(value, 'hybrid half width')
        assert self._half_width > 0, 'Hybrid half width must be greater than 0.'

    @property
    def eps(self):
        """Get or set the small-jump cutoff. None means one grid step."""
        return self._eps

    @eps.setter
    def eps(self, value):
        if value is not None:
            value = float_positive(value, 'hybrid eps')
            assert value > 0, 'Hybrid eps must be greater than 0.'
        self._eps = value

    @property
    def bound(self):
        """Get or set the large-jump truncation bound. None means model-derived."""
        return self._bound

    @bound.setter
    def bound(self, value):
        if value is not None:
            value = float_positive(value, 'hybrid bound')
            assert value > 0, 'Hybrid bound must be greater than 0.'
        self._bound = value

    @classmethod
    def from_dict(cls, data):
        """Create a HybridConfig from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": 'HybridConfig',
            "dy": 0.01,
            "steps_per_year": 10,
            "half_width": 6,
            "eps": None,
            "bound": None
            }
        """
        assert data['type'] == 'HybridConfig', \
            'Expected HybridConfig. Got {}.'.format(data['type'])
        dy = data['dy'] if 'dy' in data else 0.01
        steps = data['steps_per_year'] if 'steps_per_year' in data else 10
        width = data['half_width'] if 'half_width' in data else 6
        eps = data['eps'] if 'eps' in data else None
        bound = data['bound'] if 'bound' in data else None
        return cls(dy, steps, width, eps, bound)

    def to_dict(self):
        """HybridConfig dictionary representation."""
        return {
            'type': 'HybridConfig',
            'dy': self.dy,
            'steps_per_year': self.steps_per_year,
            'half_width': self.half_width,
            'eps': self.eps,
            'bound': self.bound
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return HybridConfig(self._dy, self._steps_per_year, self._half_width,
                            self._eps, self._bound)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self._dy, self._steps_per_year, self._half_width, self._eps,
                self._bound)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, HybridConfig) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'HybridConfig: [dy: {}] [steps per year: {}]'.format(
            self.dy, self.steps_per_year)
