# coding=utf-8
"""Initial discount curves fitted by the Hull-White model."""
from __future__ import division

import csv

import numpy as np

from fairyfly.typing import float_in_range

FORWARD_STEP = 1.0 / 365


class FlatCurve(object):
    """Discount curve with a constant continuously compounded rate.

    Args:
        rate: A number for the continuously compounded zero rate.

    Properties:
        * rate
        * is_flat
    """
    __slots__ = ('_rate',)

    def __init__(self, rate):
        """Initialize FlatCurve."""
        self._rate = float_in_range(rate, -1.0, 1.0, 'flat curve rate')

    @property
    def rate(self):
        """Get the zero rate."""
        return self._rate

    @property
    def is_flat(self):
        """Get a boolean noting whether the curve is flat."""
        return True

    def zcb(self, maturity):
        """Get the zero-coupon bond price for a maturity or an array of maturities."""
        return np.exp(-self._rate * np.asarray(maturity, dtype=float))

    def fwd(self, maturity):
        """Get the instantaneous forward rate for a maturity or an array of them."""
        return np.full_like(np.asarray(maturity, dtype=float), self._rate)

    def log_zcb_difference(self, start, end):
        """Get ln P(0, start) - ln P(0, end)."""
        return self._rate * (end - start)

    @classmethod
    def from_dict(cls, data):
        """Create a FlatCurve from a dictionary.

        .. code-block:: python

            {"type": "FlatCurve", "rate": 0.02}
        """
        assert data['type'] == 'FlatCurve', \
            'Expected FlatCurve. Got {}.'.format(data['type'])
        return cls(data['rate'])

    def to_dict(self):
        """FlatCurve dictionary representation."""
        return {'type': 'FlatCurve', 'rate': self.rate}

    def duplicate(self):
        """Get a copy of this object."""
        return FlatCurve(self._rate)

    def __hash__(self):
        return hash(('FlatCurve', self._rate))

    def __eq__(self, other):
        return isinstance(other, FlatCurve) and self._rate == other._rate

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'FlatCurve: {}'.format(self._rate)


class TabulatedCurve(object):
    """Discount curve interpolated log-linearly between zero-coupon prices.

    Beyond the last maturity the last forward rate is held constant.

    Args:
        maturities: A list of strictly increasing positive maturities in years.
            A point at maturity 0 with price 1 is added when missing.
        prices: A list of positive zero-coupon prices matching the maturities.

    Properties:
        * maturities
        * prices
        * is_flat
    """
    __slots__ = ('_maturities', '_prices', '_log_prices')

    def __init__(self, maturities, prices):
        """Initialize TabulatedCurve."""
        mats = np.array(maturities, dtype=float)
        vals = np.array(prices, dtype=float)
        if mats.ndim != 1 or mats.shape != vals.shape or len(mats) == 0:
            raise ValueError('Curve maturities and prices must be two lists '
                             'of the same non-zero length.')
        if np.any(np.diff(mats) <= 0):
            raise ValueError('Curve maturities must be strictly increasing.')
        if mats[0] < 0:
            raise ValueError('Curve maturities cannot be negative. '
                             'Got {}.'.format(mats[0]))
        if np.any(vals <= 0):
            raise ValueError('Curve zero-coupon prices must be positive.')
        if mats[0] == 0:
            if abs(vals[0] - 1) > 1e-12:
                raise ValueError('The zero-coupon price at maturity 0 must be 1. '
                                 'Got {}.'.format(vals[0]))
        else:
            mats = np.concatenate(([0.0], mats))
            vals = np.concatenate(([1.0], vals))
        self._maturities = mats
        self._prices = vals
        self._log_prices = np.log(vals)
        self._log_prices[0] = 0.0
        for arr in (self._maturities, self._prices, self._log_prices):
            arr.flags.writeable = False

    @property
    def maturities(self):
        """Get an array of the curve maturities, starting at 0."""
        return self._maturities

    @property
    def prices(self):
        """Get an array of the zero-coupon prices, starting at 1."""
        return self._prices

    @property
    def is_flat(self):
        """Get a boolean noting whether the curve is flat."""
        return False

    def _log_zcb(self, maturity):
        t = np.asarray(maturity, dtype=float)
        mats, logs = self._maturities, self._log_prices
        inside = np.interp(t, mats, logs)
        if len(mats) > 1:
            slope = (logs[-1] - logs[-2]) / (mats[-1] - mats[-2])
        else:
            slope = 0.0
        return np.where(t > mats[-1], logs[-1] + slope * (t - mats[-1]), inside)

    def zcb(self, maturity):
        """Get the zero-coupon bond price for a maturity or an array of maturities."""
        return np.exp(self._log_zcb(maturity))

    def fwd(self, maturity):
        """Get the instantaneous forward rate by central differences of ln P.

        A forward difference is used within one step of maturity 0.
        """
        t = np.asarray(maturity, dtype=float)
        lo = np.maximum(t - FORWARD_STEP, 0.0)
        hi = lo + 2 * FORWARD_STEP
        return -(self._log_zcb(hi) - self._log_zcb(lo)) / (hi - lo)

    def log_zcb_difference(self, start, end):
        """Get ln P(0, start) - ln P(0, end)."""
        return float(self._log_zcb(start) - self._log_zcb(end))

    @classmethod
    def from_csv(cls, file_path):
        """Create a TabulatedCurve from a CSV file of maturities and prices.

        Args:
            file_path: Path to a CSV file with a header row followed by rows of
                maturity in years and zero-coupon price.
        """
        mats, prices = [], []
        with open(file_path, 'r') as inf:
            reader = csv.reader(inf)
            for row_i, row in enumerate(reader):
                if row_i == 0 or not row or not ''.join(row).strip():
                    continue  # header or blank row
                try:
                    mats.append(float(row[0]))
                    prices.append(float(row[1]))
                except (IndexError, ValueError):
                    raise ValueError('Curve file "{}" row {} could not be parsed '
                                     'as a maturity and a price: {}'.format(
                                         file_path, row_i + 1, row))
        return cls(mats, prices)

    @classmethod
    def from_dict(cls, data):
        """Create a TabulatedCurve from a dictionary.

        .. code-block:: python

            {
            "type": "TabulatedCurve",
            "maturities": [1, 5, 10, 30],
            "prices": [0.98, 0.9, 0.8, 0.5]
            }
        """
        assert data['type'] == 'TabulatedCurve', \
            'Expected TabulatedCurve. Got {}.'.format(data['type'])
        return cls(data['maturities'], data['prices'])

    def to_dict(self):
        """TabulatedCurve dictionary representation."""
        return {
            'type': 'TabulatedCurve',
            'maturities': self._maturities.tolist(),
            'prices': self._prices.tolist()
        }

    def duplicate(self):
        """Get a copy of this object."""
        return TabulatedCurve(self._maturities, self._prices)

    def __hash__(self):
        return hash((tuple(self._maturities), tuple(self._prices)))

    def __eq__(self, other):
        return isinstance(other, TabulatedCurve) and \
            np.array_equal(self._maturities, other._maturities) and \
            np.array_equal(self._prices, other._prices)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'TabulatedCurve: [{} points] [last maturity: {}]'.format(
            len(self._maturities), self._maturities[-1])


def dict_to_curve(curve_dict):
    """Get a discount curve from a dictionary or a path to a CSV file.

    Args:
        curve_dict: A FlatCurve or TabulatedCurve dictionary or a text string
            for the path to a curve CSV file.
    """
    if isinstance(curve_dict, str):
        return TabulatedCurve.from_csv(curve_dict)
    try:
        curve_type = curve_dict['type']
    except KeyError:
        raise ValueError('Curve dictionary lacks required "type" key.')
    if curve_type == 'FlatCurve':
        return FlatCurve.from_dict(curve_dict)
    elif curve_type == 'TabulatedCurve':
        return TabulatedCurve.from_dict(curve_dict)
    raise ValueError('{} is not a recognized curve type.'.format(curve_type))
