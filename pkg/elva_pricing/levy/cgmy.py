# coding=utf-8
"""CGMY (tempered stable) process."""
from __future__ import division

import numpy as np
from scipy.special import gamma as gamma_fn

from fairyfly._lockable import lockable
from fairyfly.typing import float_positive

from ._base import _LevyModelBase


@lockable
class CGMY(_LevyModelBase):
    """CGMY Levy process.

    Args:
        c: A positive number for the overall intensity of the jumps.
        g: A positive number for the exponential decay of the negative jumps.
        m: A number greater than 1 for the exponential decay of the positive
            jumps. Values of 1 or less give the fund an infinite expected value.
        y: A number below 2 for the fine structure of the process. Integer
            values are not supported since the exponent has a pole there.

    Properties:
        * c
        * g
        * m
        * y
        * display_name
        * user_data
        * diffusion_variance
        * mean_rate
        * variance_rate
        * martingale_correction
    """
    __slots__ = ('_c', '_g', '_m', '_y', '_cdf_tables')
    CDF_POINTS = 2048
    COS_TERMS = 2048
    CDF_WIDTH = 16

    def __init__(self, c, g, m, y):
        """Initialize CGMY."""
        _LevyModelBase.__init__(self)
        self._cdf_tables = {}
        self.c = c
        self.g = g
        self.m = m
        self.y = y

    @property
    def c(self):
        """Get or set a positive number for the intensity of the jumps."""
        return self._c

    @c.setter
    def c(self, value):
        self._c = float_positive(value, 'CGMY C')
        assert self._c > 0, 'CGMY C must be greater than 0.'
        self._cdf_tables.clear()

    @property
    def g(self):
        """Get or set a positive number for the decay of the negative jumps."""
        return self._g

    @g.setter
    def g(self, value):
        self._g = float_positive(value, 'CGMY G')
        assert self._g > 0, 'CGMY G must be greater than 0.'
        self._cdf_tables.clear()

    @property
    def m(self):
        """Get or set a number greater than 1 for the decay of the positive jumps."""
        return self._m

    @m.setter
    def m(self, value):
        self._m = float_positive(value, 'CGMY M')
        assert self._m > 1, 'CGMY M must be greater than 1 for a finite ' \
            'exponential moment. Got {}.'.format(self._m)
        self._cdf_tables.clear()

    @property
    def y(self):
        """Get or set a number below 2 for the fine structure of the jumps."""
        return self._y

    @y.setter
    def y(self, value):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise TypeError('Expected number for CGMY Y. Got {}.'.format(value))
        assert value < 2, 'CGMY Y must be lower than 2. Got {}.'.format(value)
        assert value != round(value), 'CGMY Y cannot be an integer. ' \
            'Got {}.'.format(value)
        self._y = value
        self._cdf_tables.clear()

    @property
    def mean_rate(self):
        """Get the first cumulant of X_1 without the martingale drift."""
        y = self._y
        return self._c * gamma_fn(1 - y) * (self._m ** (y - 1) - self._g ** (y - 1))

    @property
    def variance_rate(self):
        """Get the second cumulant of X_1."""
        y = self._y
        return self._c * gamma_fn(2 - y) * (self._m ** (y - 2) + self._g ** (y - 2))

    def _char_exponent(self, xi):
        y = self._y
        g_pow = np.power(complex(self._g), y)
        m_pow = np.power(complex(self._m), y)
        return self._c * gamma_fn(-y) * (
            g_pow - np.power(self._g + 1j * xi, y) +
            m_pow - np.power(self._m - 1j * xi, y))

    def _levy_density(self, y):
        abs_y = np.abs(y)
        decay = np.where(y < 0, self._g, self._m)
        return self._c * np.exp(-decay * abs_y) / abs_y ** (1 + self._y)

    def cumulative_table(self, dt):
        """Get the grid and CDF values of X_dt recovered from the exponent.

        The distribution is recovered with a cosine expansion on the mean plus
        or minus CDF_WIDTH standard deviations. Tables are cached per time step.

        Args:
            dt: A positive number for the time step in years.

        Returns:
            A tuple with two increasing arrays for the grid and the CDF values.
        """
        key = float(dt)
        try:
            return self._cdf_tables[key]
        except KeyError:
            pass
        mean = self.mean_rate * dt
        half = self.CDF_WIDTH * np.sqrt(self.variance_rate * dt)
        lo, hi = mean - half, mean + half
        grid = np.linspace(lo, hi, self.CDF_POINTS)
        freqs = np.arange(self.COS_TERMS) * np.pi / (hi - lo)
        char_fn = np.exp(-dt * self.char_exponent(freqs.astype(complex)))
        coeffs = 2.0 / (hi - lo) * np.real(char_fn * np.exp(-1j * freqs * lo))
        shift = grid - lo
        cdf = 0.5 * coeffs[0] * shift + np.sin(np.outer(shift, freqs[1:])) @ \
            (coeffs[1:] / freqs[1:])
        cdf = np.maximum.accumulate(np.clip(cdf, 0.0, 1.0))
        cdf[0] = 0.0
        cdf = cdf / cdf[-1]
        keep = np.concatenate(([True], np.diff(cdf) > 0))
        table = (grid[keep], cdf[keep])
        self._cdf_tables[key] = table
        return table

    def _sample(self, dt, rng, size):
        grid, cdf = self.cumulative_table(dt)
        return np.interp(rng.random(size), cdf, grid)

    def _parameters(self):
        return (self._c, self._g, self._m, self._y)

    @classmethod
    def from_dict(cls, data):
        """Create a CGMY model from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": 'CGMY',
            "c": 0.02,
            "g": 5.0,
            "m": 15.0,
            "y": 1.2
            }
        """
        assert data['type'] == 'CGMY', 'Expected CGMY. Got {}.'.format(data['type'])
        model = cls(data['c'], data['g'], data['m'], data['y'])
        return model._apply_base_keys(data)

    def to_dict(self):
        """CGMY dictionary representation."""
        base = {
            'type': 'CGMY',
            'c': self.c,
            'g': self.g,
            'm': self.m,
            'y': self.y
        }
        return self._base_dict(base)
