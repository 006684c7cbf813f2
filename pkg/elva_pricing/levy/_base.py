# coding=utf-8
"""Base exponential Levy model."""
from __future__ import division

import numpy as np
from scipy import integrate

from fairyfly._lockable import lockable

STRIP_TOLERANCE = 1e-12


@lockable
class _LevyModelBase(object):
    """Base class for the Levy processes driving the log of the fund.

    The characteristic exponent follows the convention E[exp(i*xi*X_t)] =
    exp(-t*psi(xi)). Exponents returned by char_exponent do not include the
    risk-neutral drift; use corrected_char_exponent for the martingale version.

    Properties:
        * display_name
        * user_data
        * diffusion_variance
        * mean_rate
        * variance_rate
        * martingale_correction
    """
    __slots__ = ('_display_name', '_user_data', '_locked')

    def __init__(self):
        """Initialize Levy model base."""
        self._locked = False
        self._display_name = None
        self._user_data = None

    @property
    def display_name(self):
        """Get or set a string for the model name.

        If not set, this will be equal to the model type.
        """
        if self._display_name is None:
            return self.__class__.__name__
        return self._display_name

    @display_name.setter
    def display_name(self, value):
        if value is not None:
            value = str(value)
        self._display_name = value

    @property
    def user_data(self):
        """Get or set an optional dictionary for additional meta data for this object.

        This will be None until it has been set. All keys and values of this
        dictionary should be of a standard Python type to ensure correct
        serialization of the object to/from JSON (eg. str, float, int, list, dict)
        """
        if self._user_data is not None:
            return self._user_data

    @user_data.setter
    def user_data(self, value):
        if value is not None:
            assert isinstance(value, dict), 'Expected dictionary for elva_pricing ' \
                'object user_data. Got {}.'.format(type(value))
        self._user_data = value

    @property
    def diffusion_variance(self):
        """Get the variance rate of the Gaussian part of the process."""
        return 0.0

    @property
    def mean_rate(self):
        """Get the first cumulant of X_1 without the martingale drift."""
        raise NotImplementedError

    @property
    def variance_rate(self):
        """Get the second cumulant of X_1."""
        raise NotImplementedError

    @property
    def martingale_correction(self):
        """Get the drift rate mu_c = psi(-i) that makes exp(X_t + mu_c*t) a martingale.
        """
        return float(np.real(self.char_exponent(-1j)))

    def char_exponent(self, xi):
        """Get the characteristic exponent psi(xi) without the martingale drift.

        Args:
            xi: A complex number or array of complex numbers with imaginary
                part in the strip [-1, 0].

        Returns:
            A complex number (or array) with psi evaluated on principal branches.
        """
        xi_arr = np.asarray(xi, dtype=complex)
        imag = xi_arr.imag
        if np.any(imag < -1 - STRIP_TOLERANCE) or np.any(imag > STRIP_TOLERANCE):
            raise ValueError(
                'Frequency {} is outside the analyticity strip -1 <= Im(xi) <= 0 '
                'of the {} exponent.'.format(xi, self.__class__.__name__))
        psi = self._char_exponent(xi_arr)
        return complex(psi) if np.ndim(psi) == 0 else psi

    def corrected_char_exponent(self, xi):
        """Get the exponent psi(xi) - i*mu_c*xi of the risk-neutral process.

        Args:
            xi: A complex number or array of complex numbers inside the strip.
        """
        return self.char_exponent(xi) - 1j * self.martingale_correction * \
            np.asarray(xi, dtype=complex)

    def levy_density(self, y):
        """Get the Levy density nu(y) of the jump measure.

        Args:
            y: A non-zero jump size in log-price units or an array of them.
        """
        y_arr = np.asarray(y, dtype=float)
        if np.any(y_arr == 0):
            raise ValueError('The Levy density is not defined at a jump size of 0.')
        dens = self._levy_density(y_arr)
        return float(dens) if np.ndim(dens) == 0 else dens

    def sample_increment(self, dt, rng, size=None):
        """Draw increments X_dt of the process without the martingale drift.

        Args:
            dt: A positive number for the time step in years.
            rng: A numpy Generator that supplies the random numbers.
            size: An optional integer or tuple for the number of draws. If None,
                a single float is returned.
        """
        assert dt > 0, 'Levy increment time step must be positive. Got {}.'.format(dt)
        return self._sample(dt, rng, size)

    def small_jump_variance(self, eps):
        """Get the integral of y^2 nu(y) over the jumps with |y| < eps.

        Args:
            eps: A positive number for the small-jump cutoff.
        """
        total = 0.0
        for lo, hi in ((-eps, 0.0), (0.0, eps)):
            val, err = integrate.quad(
                lambda y: y * y * self._levy_density(np.asarray(y)), lo, hi,
                limit=200)
            if err > 1e-8 + 1e-6 * abs(val):
                raise ValueError(
                    'Small-jump quadrature of the {} density did not converge on '
                    '({}, {}). Estimated error: {}.'.format(
                        self.__class__.__name__, lo, hi, err))
            total += val
        return total

    def tail_intensity(self, bound):
        """Get the intensity of the jumps with |y| > bound.

        Args:
            bound: A positive number for the truncation bound.
        """
        total = 0.0
        for lo, hi in ((-np.inf, -bound), (bound, np.inf)):
            val, _ = integrate.quad(
                lambda y: self._levy_density(np.asarray(y)), lo, hi, limit=200)
            total += val
        return total

    def truncation_bound(self, tol=1e-8, dy=None):
        """Get the smallest jump bound whose neglected tail intensity is below tol.

        Args:
            tol: A positive number for the accepted tail intensity. (Default: 1e-8).
            dy: An optional grid step. When given, the bound is rounded up to
                a multiple of it.
        """
        hi = 1.0
        for _ in range(60):
            if self.tail_intensity(hi) < tol:
                break
            hi *= 2
        else:
            raise ValueError('No truncation bound found for {} with a tail '
                             'tolerance of {}.'.format(self.display_name, tol))
        lo = 0.0
        while hi - lo > 1e-4:
            mid = 0.5 * (lo + hi)
            if self.tail_intensity(mid) < tol:
                hi = mid
            else:
                lo = mid
        if dy is not None:
            return max(1, int(np.ceil(hi / dy - 1e-9))) * dy
        return hi

    def _char_exponent(self, xi):
        raise NotImplementedError

    def _levy_density(self, y):
        raise NotImplementedError

    def _sample(self, dt, rng, size):
        raise NotImplementedError

    def _base_dict(self, base):
        """Add the display_name and user_data to a model dictionary."""
        if self._display_name is not None:
            base['display_name'] = self.display_name
        if self._user_data is not None:
            base['user_data'] = self.user_data
        return base

    def _apply_base_keys(self, data):
        """Set the display_name and user_data from a model dictionary."""
        if 'display_name' in data and data['display_name'] is not None:
            self.display_name = data['display_name']
        if 'user_data' in data and data['user_data'] is not None:
            self.user_data = data['user_data']
        return self

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        new_obj = self.__class__(*self._parameters())
        new_obj._display_name = self._display_name
        new_obj._user_data = None if self._user_data is None else self._user_data.copy()
        return new_obj

    def _parameters(self):
        raise NotImplementedError

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self.__class__.__name__,) + tuple(self._parameters())

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '{}: {}'.format(
            self.__class__.__name__, ', '.join(str(p) for p in self._parameters()))
