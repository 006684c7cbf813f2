# coding=utf-8
"""Merton jump diffusion process."""
from __future__ import division

import numpy as np
from scipy.stats import norm

from fairyfly._lockable import lockable
from fairyfly.typing import float_positive

from ._base import _LevyModelBase


@lockable
class MJD(_LevyModelBase):
    """Merton jump diffusion with Gaussian jump sizes.

    Args:
        sigma: A number greater than or equal to 0 for the volatility of the
            diffusion part.
        jump_intensity: A number greater than or equal to 0 for the expected
            number of jumps per year.
        jump_mean: A number for the mean of the log jump sizes.
        jump_std: A positive number for the standard deviation of the log jump sizes.

    Properties:
        * sigma
        * jump_intensity
        * jump_mean
        * jump_std
        * display_name
        * user_data
        * diffusion_variance
        * mean_rate
        * variance_rate
        * martingale_correction
    """
    __slots__ = ('_sigma', '_jump_intensity', '_jump_mean', '_jump_std')

    def __init__(self, sigma, jump_intensity, jump_mean, jump_std):
        """Initialize MJD."""
        _LevyModelBase.__init__(self)
        self.sigma = sigma
        self.jump_intensity = jump_intensity
        self.jump_mean = jump_mean
        self.jump_std = jump_std

    @property
    def sigma(self):
        """Get or set a number for the volatility of the diffusion part."""
        return self._sigma

    @sigma.setter
    def sigma(self, value):
        self._sigma = float_positive(value, 'MJD sigma')

    @property
    def jump_intensity(self):
        """Get or set a number for the expected number of jumps per year."""
        return self._jump_intensity

    @jump_intensity.setter
    def jump_intensity(self, value):
        self._jump_intensity = float_positive(value, 'MJD jump intensity')

    @property
    def jump_mean(self):
        """Get or set a number for the mean of the log jump sizes."""
        return self._jump_mean

    @jump_mean.setter
    def jump_mean(self, value):
        try:
            self._jump_mean = float(value)
        except (TypeError, ValueError):
            raise TypeError('Expected number for MJD jump mean. Got {}.'.format(value))

    @property
    def jump_std(self):
        """Get or set a positive number for the standard deviation of the log jumps."""
        return self._jump_std

    @jump_std.setter
    def jump_std(self, value):
        self._jump_std = float_positive(value, 'MJD jump std')
        assert self._jump_std > 0, 'MJD jump std must be greater than 0.'

    @property
    def diffusion_variance(self):
        """Get the variance rate of the Gaussian part of the process."""
        return self._sigma ** 2

    @property
    def mean_rate(self):
        """Get the first cumulant of X_1 without the martingale drift."""
        return self._jump_intensity * self._jump_mean

    @property
    def variance_rate(self):
        """Get the second cumulant of X_1."""
        return self._sigma ** 2 + self._jump_intensity * \
            (self._jump_mean ** 2 + self._jump_std ** 2)

    def _char_exponent(self, xi):
        jump_cf = np.exp(1j * self._jump_mean * xi - 0.5 * self._jump_std ** 2 * xi * xi)
        return 0.5 * self._sigma ** 2 * xi * xi - self._jump_intensity * (jump_cf - 1)

    def _levy_density(self, y):
        return self._jump_intensity * norm.pdf(y, self._jump_mean, self._jump_std)

    def tail_intensity(self, bound):
        """Get the intensity of the jumps with |y| > bound.

        Args:
            bound: A positive number for the truncation bound.
        """
        return self._jump_intensity * (
            norm.sf(bound, self._jump_mean, self._jump_std) +
            norm.cdf(-bound, self._jump_mean, self._jump_std))

    def _sample(self, dt, rng, size):
        diffusion = self._sigma * np.sqrt(dt) * rng.standard_normal(size)
        count = rng.poisson(self._jump_intensity * dt, size)
        jumps = self._jump_mean * count + self._jump_std * np.sqrt(count) * \
            rng.standard_normal(size)
        return diffusion + jumps

    def _parameters(self):
        return (self._sigma, self._jump_intensity, self._jump_mean, self._jump_std)

    @classmethod
    def from_dict(cls, data):
        """Create a MJD model from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": 'MJD',
            "sigma": 0.25,
            "jump_intensity": 0.6,
            "jump_mean": 0.01,
            "jump_std": 0.13
            }
        """
        assert data['type'] == 'MJD', 'Expected MJD. Got {}.'.format(data['type'])
        model = cls(data['sigma'], data['jump_intensity'], data['jump_mean'],
                    data['jump_std'])
        return model._apply_base_keys(data)

    def to_dict(self):
        """MJD dictionary representation."""
        base = {
            'type': 'MJD',
            'sigma': self.sigma,
            'jump_intensity': self.jump_intensity,
            'jump_mean': self.jump_mean,
            'jump_std': self.jump_std
        }
        return self._base_dict(base)
