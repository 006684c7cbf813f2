# coding=utf-8
"""Normal Inverse Gaussian process."""
from __future__ import division

import numpy as np
from scipy.special import kve

from fairyfly._lockable import lockable
from fairyfly.typing import float_positive

from ._base import _LevyModelBase


@lockable
class NIG(_LevyModelBase):
    """Normal Inverse Gaussian Levy process.

    Args:
        alpha: A positive number for the tail heaviness of the process.
        beta: A number for the skew of the process. The absolute value of both
            beta and beta + 1 must be lower than alpha so that the fund has
            a finite expected value.
        delta: A positive number for the scale of the process.

    Properties:
        * alpha
        * beta
        * delta
        * gamma
        * display_name
        * user_data
        * diffusion_variance
        * mean_rate
        * variance_rate
        * martingale_correction
    """
    __slots__ = ('_alpha', '_beta', '_delta')

    def __init__(self, alpha, beta, delta):
        """Initialize NIG."""
        _LevyModelBase.__init__(self)
        self._alpha, self._beta = float('inf'), 0.0  # dummy values to ensure checks pass
        self.alpha = alpha
        self.beta = beta
        self.delta = delta

    @property
    def alpha(self):
        """Get or set a positive number for the tail heaviness."""
        return self._alpha

    @alpha.setter
    def alpha(self, value):
        self._alpha = float_positive(value, 'NIG alpha')
        assert self._alpha > 0, 'NIG alpha must be greater than 0.'
        self._check_skew()

    @property
    def beta(self):
        """Get or set a number for the skew."""
        return self._beta

    @beta.setter
    def beta(self, value):
        try:
            self._beta = float(value)
        except (TypeError, ValueError):
            raise TypeError('Expected number for NIG beta. Got {}.'.format(value))
        self._check_skew()

    @property
    def delta(self):
        """Get or set a positive number for the scale."""
        return self._delta

    @delta.setter
    def delta(self, value):
        self._delta = float_positive(value, 'NIG delta')
        assert self._delta > 0, 'NIG delta must be greater than 0.'

    @property
    def gamma(self):
        """Get the number sqrt(alpha^2 - beta^2)."""
        return np.sqrt(self._alpha ** 2 - self._beta ** 2)

    @property
    def mean_rate(self):
        """Get the first cumulant of X_1 without the martingale drift."""
        return self._delta * self._beta / self.gamma

    @property
    def variance_rate(self):
        """Get the second cumulant of X_1."""
        return self._delta * self._alpha ** 2 / self.gamma ** 3

    def _check_skew(self):
        assert abs(self._beta) < self._alpha, 'NIG requires |beta| < alpha. ' \
            'Got alpha = {} and beta = {}.'.format(self._alpha, self._beta)
        assert abs(self._beta + 1) < self._alpha, 'NIG requires |beta + 1| < alpha ' \
            'for a finite exponential moment. Got alpha = {} and beta = {}.'.format(
                self._alpha, self._beta)

    def _char_exponent(self, xi):
        shifted = self._beta + 1j * xi
        base = complex(self._alpha * self._alpha) - \
            complex(self._beta) * complex(self._beta)
        return self._delta * (np.sqrt(self._alpha * self._alpha - shifted * shifted) -
                              np.sqrt(base))

    def _levy_density(self, y):
        abs_y = np.abs(y)
        return self._delta * self._alpha / np.pi * kve(1, self._alpha * abs_y) * \
            np.exp(self._beta * y - self._alpha * abs_y) / abs_y

    def _sample(self, dt, rng, size):
        # inverse Gaussian subordinator with mean delta*dt/gamma and shape (delta*dt)^2
        scale = self._delta * dt
        sub = rng.wald(scale / self.gamma, scale * scale, size)
        return self._beta * sub + np.sqrt(sub) * rng.standard_normal(size)

    def _parameters(self):
        return (self._alpha, self._beta, self._delta)

    @classmethod
    def from_dict(cls, data):
        """Create a NIG model from a dictionary.

        Args:
            data: A python dictionary in the following format

        .. code-block:: python

            {
            "type": 'NIG',
            "alpha": 6.0,
            "beta": -0.4,
            "delta": 2.0
            }
        """
        assert data['type'] == 'NIG', 'Expected NIG. Got {}.'.format(data['type'])
        model = cls(data['alpha'], data['beta'], data['delta'])
        return model._apply_base_keys(data)

    def to_dict(self):
        """NIG dictionary representation."""
        base = {
            'type': 'NIG',
            'alpha': self.alpha,
            'beta': self.beta,
            'delta': self.delta
        }
        return self._base_dict(base)
