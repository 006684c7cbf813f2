# coding=utf-8
"""Hull-White short rate model parameters and coefficient functions."""
from __future__ import division

import numpy as np

from fairyfly._lockable import lockable
from fairyfly.typing import float_positive, float_in_range

from .curve import FlatCurve, TabulatedCurve, dict_to_curve


@lockable
class HullWhiteParams(object):
    """Hull-White short rate model r_t = sigma * R_t + beta(t).

    R is an Ornstein-Uhlenbeck factor with dR = -k R dt + dW and R_0 = 0, and
    beta is the deterministic shift that fits the initial discount curve.

    Args:
        k: A positive number for the speed of mean reversion.
        sigma: A positive number for the volatility of the short rate.
        r0: A number for the initial short rate. (Default: 0.02).
        curve: An optional TabulatedCurve for the initial discount curve. If
            None, the flat curve at r0 is used. (Default: None).

    Properties:
        * k
        * sigma
        * r0
        * curve
        * is_flat
    """
    __slots__ = ('_k', '_sigma', '_r0', '_curve', '_locked')

    def __init__(self, k=0.2, sigma=0.03, r0=0.02, curve=None):
        """Initialize HullWhiteParams."""
        self._locked = False
        self.k = k
        self.sigma = sigma
        self.r0 = r0
        self.curve = curve

    @property
    def k(self):
        """Get or set a positive number for the speed of mean reversion."""
        return self._k

    @k.setter
    def k(self, value):
        self._k = float_positive(value, 'Hull-White k')
        assert self._k > 0, 'Hull-White k must be greater than 0.'

    @property
    def sigma(self):
        """Get or set a positive number for the short rate volatility."""
        return self._sigma

    @sigma.setter
    def sigma(self, value):
        self._sigma = float_positive(value, 'Hull-White sigma')
        assert self._sigma > 0, 'Hull-White sigma must be greater than 0.'

    @property
    def r0(self):
        """Get or set a number for the initial short rate."""
        return self._r0

    @r0.setter
    def r0(self, value):
        self._r0 = float_in_range(value, -1.0, 1.0, 'Hull-White r0')

    @property
    def curve(self):
        """Get or set the initial discount curve.

        Setting this to None results in the flat curve at r0.
        """
        if self._curve is None:
            return FlatCurve(self._r0)
        return self._curve

    @curve.setter
    def curve(self, value):
        if value is not None:
            assert isinstance(value, (FlatCurve, TabulatedCurve)), 'Expected ' \
                'discount curve for HullWhiteParams. Got {}.'.format(type(value))
            if isinstance(value, FlatCurve):
                self._r0 = value.rate
                value = None
        self._curve = value

    @property
    def is_flat(self):
        """Get a boolean for whether the initial curve is flat at r0."""
        return self._curve is None

    def _convexity(self, t):
        """Get sigma^2 / (2 k^2) * (1 - exp(-k t))^2."""
        k = self._k
        return self._sigma ** 2 / (2 * k * k) * (-np.expm1(-k * t)) ** 2

    def beta(self, t):
        """Get the deterministic shift beta(t) of the short rate.

        Args:
            t: A number or an array of numbers for the time in years.
        """
        t = np.asarray(t, dtype=float)
        shift = self.curve.fwd(t) + self._convexity(t)
        return float(shift) if shift.ndim == 0 else shift

    def theta(self, t):
        """Get the mean reversion level theta(t) of the flat-curve model.

        Args:
            t: A number or an array of numbers for the time in years.
        """
        if not self.is_flat:
            raise ValueError('Hull-White theta is only available for the flat curve.')
        k = self._k
        t = np.asarray(t, dtype=float)
        level = self._r0 + self._sigma ** 2 / (2 * k * k) * (-np.expm1(-2 * k * t))
        return float(level) if level.ndim == 0 else level

    def integrated_beta(self, start, end):
        """Get the integral of beta(s) over [start, end].

        Args:
            start: A number for the start time in years.
            end: A number for the end time in years.
        """
        k = self._k
        conv = self._sigma ** 2 / (2 * k * k) * (
            (end - start) + 2 / k * (np.exp(-k * end) - np.exp(-k * start)) -
            0.5 / k * (np.exp(-2 * k * end) - np.exp(-2 * k * start)))
        return float(self.curve.log_zcb_difference(start, end) + conv)

    def factor_moments(self, h):
        """Get the transition moments of (R_h, integral of R over [0, h]).

        Args:
            h: A positive number for the interval length in years.

        Returns:
            A tuple with (decay, integral_factor, var_r, var_int, cov) where the
            conditional means are R_0 * decay and R_0 * integral_factor.
        """
        k = self._k
        decay = np.exp(-k * h)
        int_factor = -np.expm1(-k * h) / k
        var_r = -np.expm1(-2 * k * h) / (2 * k)
        var_int = (h - 2 * int_factor - np.expm1(-2 * k * h) / (2 * k)) / (k * k)
        cov = (1 - 2 * decay + decay * decay) / (2 * k * k)
        return decay, int_factor, var_r, var_int, cov

    def integrated_variance(self, t):
        """Get the variance of the integral of sigma * R over [0, t]."""
        return self._sigma ** 2 * self.factor_moments(t)[3]

    def factor_variance(self, t):
        """Get the variance of the OU factor R_t."""
        return self.factor_moments(t)[2]

    @classmethod
    def from_dict(cls, data):
        """Create HullWhiteParams from a dictionary.

        Args:
            data: A python dictionary in the following format. The curve key
                is optional and can also be a path to a curve CSV file.

        .. code-block:: python

            {
            "type": 'HullWhiteParams',
            "k": 0.2,
            "sigma": 0.03,
            "r0": 0.02,
            "curve": None
            }
        """
        assert data['type'] == 'HullWhiteParams', \
            'Expected HullWhiteParams. Got {}.'.format(data['type'])
        k = data['k'] if 'k' in data else 0.2
        sigma = data['sigma'] if 'sigma' in data else 0.03
        r0 = data['r0'] if 'r0' in data else 0.02
        curve = dict_to_curve(data['curve']) \
            if 'curve' in data and data['curve'] is not None else None
        return cls(k, sigma, r0, curve)

    def to_dict(self):
        """HullWhiteParams dictionary representation."""
        return {
            'type': 'HullWhiteParams',
            'k': self.k,
            'sigma': self.sigma,
            'r0': self.r0,
            'curve': None if self._curve is None else self._curve.to_dict()
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        curve = None if self._curve is None else self._curve.duplicate()
        return HullWhiteParams(self._k, self._sigma, self._r0, curve)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self._k, self._sigma, self._r0, hash(self._curve))

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, HullWhiteParams) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'HullWhiteParams: [k: {}] [sigma: {}] [r0: {}]'.format(
            self.k, self.sigma, self.r0)
