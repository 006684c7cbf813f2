# coding=utf-8
"""Variance Gamma process."""
from __future__ import division

import numpy as np

from fairyfly._lockable import lockable
from fairyfly.typing import float_positive

from ._base import _LevyModelBase


@lockable
class VG(_LevyModelBase):
    """Variance Gamma Levy process.

    The process is a Brownian motion with drift theta and volatility sigma
    evaluated at a gamma time with unit mean rate and variance rate kappa.

    Args:
        kappa: A positive number for the variance rate of the gamma subordinator.
        theta: A number for the drift of the subordinated Brownian motion.
        sigma: A positive number for the volatility of the subordinated
            Brownian motion.

    Properties:
        * kappa
        * theta
        * sigma
        * display_name
        * user_data
        * diffusion_variance
        * mean_rate
        * variance_rate
        * martingale_correction
    """
    __slots__ = ('_kappa', '_theta', '_sigma')

    def __init__(self, kappa, theta, sigma):
        """Initialize VG."""
        _LevyModelBase.__init__(self)
        self._kappa, self._theta, self._sigma = 1e-9, 0.0, 1e-9  # dummy values
        self.kappa = kappa
        self.theta = theta
        self.sigma = sigma

    @property
    def kappa(self):
        """Get or set a positive number for the subordinator variance rate."""
        return self._kappa

    @kappa.setter
    def kappa(self, value):
        self._kappa = float_positive(value, 'VG kappa')
        assert self._kappa > 0, 'VG kappa must be greater than 0.'
        self._check_moment()

    @property
    def theta(self):
        """Get or set a number for the drift of the subordinated Brownian motion."""
        return self._theta

    @theta.setter
    def theta(self, value):
        try:
            self._theta = float(value)
        except (TypeError, ValueError):
            raise TypeError('Expected number for VG theta. Got {}.'.format(value))
        self._check_moment()

    @property
    def sigma(self):
        """Get or set a positive number for the volatility."""
        return self._sigma

    @sigma.setter
    def sigma(self, value):
        self._sigma = float_positive(value, 'VG sigma')
        assert self._sigma > 0, 'VG sigma must be greater than 0.'
        self._check_moment()

    @property
    def mean_rate(self):
        """Get the first cumulant of X_1 without the martingale drift."""
        return self._theta

    @property
    def variance_rate(self):
        """Get the second cumulant of X_1."""
        return self._sigma ** 2 + self._theta ** 2 * self._kappa

    def _check_moment(self):
        moment = 1 - self._theta * self._kappa - 0.5 * self._sigma ** 2 * self._kappa
        assert moment > 0, 'VG requires 1 - theta*kappa - sigma^2*kappa/2 > 0 ' \
            'for a finite exponential moment. Got {}.'.format(moment)

    def _char_exponent(self, xi):
        kappa = self._kappa
        return np.log(1 - 1j * xi * self._theta * kappa +
                      0.5 * kappa * self._sigma ** 2 * xi * xi) / kappa

    def _levy_density(self, y):
        sig_sq = self._sigma ** 2
        a_coeff = self._theta / sig_sq
        b_coeff = np.sqrt(self._theta ** 2 + 2 * sig_sq / self._kappa) / sig_sq
        abs_y = np.abs(y)
        return np.exp(a_coeff * y - b_coeff * abs_y) / (self._kappa * abs_y)

    def _sample(self, dt, rng, size):
        sub = rng.gamma(dt / self._kappa, self._kappa, size)
        return self._theta * sub + self._sigma * np.sqrt(sub) * \
            rng.standard_normal(size)

    def _parameters(self):
        return (self._kappa, self._theta, self._sigma)

    @classmethod
    def from_dict(cls, data):
        """Create a VG model from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": 'VG',
            "kappa": 0.85,
            "theta": 0.0,
            "sigma": 0.2
            }
        """
        assert data['type'] == 'VG', 'Expected VG. Got {}.'.format(data['type'])
        model = cls(data['kappa'], data['theta'], data['sigma'])
        return model._apply_base_keys(data)

    def to_dict(self):
        """VG dictionary representation."""
        base = {
            'type': 'VG',
            'kappa': self.kappa,
            'theta': self.theta,
            'sigma': self.sigma
        }
        return self._base_dict(base)
