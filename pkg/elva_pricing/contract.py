# coding=utf-8
"""Equity-linked variable annuity contract with guaranteed and capped benefits."""
from __future__ import division

import numpy as np

from fairyfly._lockable import lockable
from fairyfly.typing import float_in_range, float_positive, int_positive


@lockable
class ElvaContract(object):
    """Equity-linked variable annuity with GMAB and GMDB riders.

    At every anniversary m, a death in the previous year pays the fund value
    clamped between the guaranteed floor F0 exp(g m) and the cap F0 exp(c m).
    Before maturity, the policyholder can surrender for the capped fund value
    reduced by a penalty. At maturity, the clamped fund value is paid.

    Args:
        maturity: A positive integer for the contract maturity in years.
        floor_rate: A number for the guaranteed growth rate g of the benefits.
        cap_rate: A number for the maximum growth rate c of the benefits. It
            must be greater than or equal to the floor_rate.
        dividend_yield: A number for the dividend yield q of the reference
            asset. (Default: 0.01).
        fees: A number between 0 and 1 (excluded) for the yearly fee deducted
            from the fund, or a list with one fee for each year 0 to
            maturity - 1. (Default: 0.02).
        penalties: A number between 0 and 1 for the surrender penalty, or a
            list with one penalty for each anniversary 1 to maturity - 1. A
            penalty of 1 removes the surrender option. (Default: 0.02).
        age: A positive integer for the age of the policyholder at inception.
            (Default: 30).
        initial_fund: A positive number for the initial premium. (Default: 1).

    Properties:
        * maturity
        * floor_rate
        * cap_rate
        * dividend_yield
        * fees
        * penalties
        * age
        * initial_fund
        * has_surrender
    """
    __slots__ = ('_maturity', '_floor_rate', '_cap_rate', '_dividend_yield',
                 '_fees', '_penalties', '_age', '_initial_fund', '_locked')

    def __init__(self, maturity, floor_rate, cap_rate, dividend_yield=0.01,
                 fees=0.02, penalties=0.02, age=30, initial_fund=1.0):
        """Initialize ElvaContract."""
        self._locked = False
        self._fees, self._penalties = 0.0, 0.0  # dummy values to ensure checks pass
        self._floor_rate, self._cap_rate = -float('inf'), float('inf')
        self.maturity = maturity
        self.floor_rate = floor_rate
        self.cap_rate = cap_rate
        self.dividend_yield = dividend_yield
        self.fees = fees
        self.penalties = penalties
        self.age = age
        self.initial_fund = initial_fund

    @property
    def maturity(self):
        """Get or set a positive integer for the contract maturity in years."""
        return self._maturity

    @maturity.setter
    def maturity(self, value):
        self._maturity = int_positive(value, 'contract maturity')
        assert self._maturity >= 1, 'Contract maturity must be at least 1 year.'
        self._check_schedules()

    @property
    def floor_rate(self):
        """Get or set a number for the guaranteed growth rate g."""
        return self._floor_rate

    @floor_rate.setter
    def floor_rate(self, value):
        self._floor_rate = float_in_range(value, -1.0, 1.0, 'contract floor rate')
        self._check_rates()

    @property
    def cap_rate(self):
        """Get or set a number for the maximum growth rate c."""
        return self._cap_rate

    @cap_rate.setter
    def cap_rate(self, value):
        self._cap_rate = float_in_range(value, -1.0, 1.0, 'contract cap rate')
        self._check_rates()

    @property
    def dividend_yield(self):
        """Get or set a number for the dividend yield q of the reference asset."""
        return self._dividend_yield

    @dividend_yield.setter
    def dividend_yield(self, value):
        self._dividend_yield = float_in_range(value, -1.0, 1.0, 'contract dividend yield')

    @property
    def fees(self):
        """Get or set the yearly fees as a number or a tuple with one fee per year.
        """
        return self._fees

    @fees.setter
    def fees(self, value):
        if isinstance(value, (list, tuple)):
            value = tuple(self._valid_fee(v) for v in value)
        else:
            value = self._valid_fee(value)
        self._fees = value
        self._check_schedules()

    @property
    def penalties(self):
        """Get or set the surrender penalties as a number or a tuple per anniversary.
        """
        return self._penalties

    @penalties.setter
    def penalties(self, value):
        if isinstance(value, (list, tuple)):
            value = tuple(float_in_range(v, 0, 1, 'contract penalty') for v in value)
        else:
            value = float_in_range(value, 0, 1, 'contract penalty')
        self._penalties = value
        self._check_schedules()

    @property
    def age(self):
        """Get or set a positive integer for the age of the policyholder at inception.
        """
        return self._age

    @age.setter
    def age(self, value):
        self._age = int_positive(value, 'contract age')

    @property
    def initial_fund(self):
        """Get or set a positive number for the initial premium F0."""
        return self._initial_fund

    @initial_fund.setter
    def initial_fund(self, value):
        self._initial_fund = float_positive(value, 'contract initial fund')
        assert self._initial_fund > 0, 'Contract initial fund must be greater than 0.'

    @property
    def has_surrender(self):
        """Get a boolean for whether any anniversary has a penalty below 1."""
        return any(self.penalty(m) < 1 for m in range(1, self._maturity))

    def fee(self, m):
        """Get the fee alpha_m charged over the year [m, m + 1].

        Args:
            m: An integer from 0 to maturity - 1.
        """
        if not 0 <= m < self._maturity:
            raise ValueError('Fee year must be between 0 and {}. Got {}.'.format(
                self._maturity - 1, m))
        return self._fees[m] if isinstance(self._fees, tuple) else self._fees

    def penalty(self, m):
        """Get the surrender penalty gamma_m at anniversary m.

        Args:
            m: An integer from 1 to maturity - 1.
        """
        if not 1 <= m < self._maturity:
            raise ValueError('Penalty anniversary must be between 1 and {}. '
                             'Got {}.'.format(self._maturity - 1, m))
        return self._penalties[m - 1] if isinstance(self._penalties, tuple) \
            else self._penalties

    def effective_dividend(self, m):
        """Get the dividend yield q - ln(1 - alpha_m) that accounts for the fee of year m.

        Args:
            m: An integer from 0 to maturity - 1.
        """
        return self._dividend_yield - np.log1p(-self.fee(m))

    def floor(self, m):
        """Get the guaranteed benefit F0 exp(g m) at anniversary m."""
        return self._initial_fund * np.exp(self._floor_rate * m)

    def cap(self, m):
        """Get the maximum benefit F0 exp(c m) at anniversary m."""
        return self._initial_fund * np.exp(self._cap_rate * m)

    def death_benefit(self, m, fund):
        """Get the death benefit paid at anniversary m.

        Args:
            m: An integer from 1 to maturity.
            fund: A number or an array of numbers for the fund value.
        """
        self._check_anniversary(m)
        return np.maximum(self.floor(m), np.minimum(self.cap(m), fund))

    def surrender_benefit(self, m, fund):
        """Get the surrender benefit at anniversary m.

        At maturity, this is the death benefit.

        Args:
            m: An integer from 1 to maturity.
            fund: A number or an array of numbers for the fund value.
        """
        self._check_anniversary(m)
        if m == self._maturity:
            return self.death_benefit(m, fund)
        return (1 - self.penalty(m)) * np.minimum(self.cap(m), fund)

    def surrender_thresholds(self, m):
        """Get the sorted fund values that delimit the regression sectors at m.

        They are the floor b1 and the cap b2 of the benefits at m with the
        halvings of b1, the midpoint of b1 and b2, and the doublings of b2.
        """
        b1, b2 = self.floor(m), self.cap(m)
        points = [b1 / 8, b1 / 4, b1 / 2, b1, (b1 + b2) / 2, b2, 2 * b2, 4 * b2, 8 * b2]
        return np.unique(points)

    def no_surrender(self):
        """Get a copy of this contract where every penalty is 1."""
        new_con = self.duplicate()
        new_con.penalties = 1.0
        return new_con

    def _valid_fee(self, value):
        fee = float_in_range(value, 0, 1, 'contract fee')
        assert fee < 1, 'Contract fee must be lower than 1. Got {}.'.format(fee)
        return fee

    def _check_rates(self):
        assert self._cap_rate >= self._floor_rate, 'Contract cap rate ({}) must be ' \
            'greater than or equal to the floor rate ({}).'.format(
                self._cap_rate, self._floor_rate)

    def _check_schedules(self):
        if isinstance(self._fees, tuple):
            assert len(self._fees) == self._maturity, 'Expected {} contract fees ' \
                'for years 0 to {}. Got {}.'.format(
                    self._maturity, self._maturity - 1, len(self._fees))
        if isinstance(self._penalties, tuple):
            assert len(self._penalties) == self._maturity - 1, 'Expected {} contract ' \
                'penalties for anniversaries 1 to {}. Got {}.'.format(
                    self._maturity - 1, self._maturity - 1, len(self._penalties))

    def _check_anniversary(self, m):
        if not 1 <= m <= self._maturity:
            raise ValueError('Anniversary must be between 1 and {}. Got {}.'.format(
                self._maturity, m))

    @classmethod
    def from_dict(cls, data):
        """Create an ElvaContract from a dictionary.

        Args:
            data: A python dictionary in the following format. The fees and
                penalties can also be lists.

        .. code-block:: python

            {
            "type": 'ElvaContract',
            "maturity": 25,
            "floor_rate": 0.01,
            "cap_rate": 0.15,
            "dividend_yield": 0.01,
            "fees": 0.02,
            "penalties": 0.02,
            "age": 30,
            "initial_fund": 1.0
            }
        """
        assert data['type'] == 'ElvaContract', \
            'Expected ElvaContract. Got {}.'.format(data['type'])
        q = data['dividend_yield'] if 'dividend_yield' in data else 0.01
        fees = data['fees'] if 'fees' in data else 0.02
        pens = data['penalties'] if 'penalties' in data else 0.02
        age = data['age'] if 'age' in data else 30
        fund = data['initial_fund'] if 'initial_fund' in data else 1.0
        return cls(data['maturity'], data['floor_rate'], data['cap_rate'],
                   q, fees, pens, age, fund)

    def to_dict(self):
        """ElvaContract dictionary representation."""
        return {
            'type': 'ElvaContract',
            'maturity': self.maturity,
            'floor_rate': self.floor_rate,
            'cap_rate': self.cap_rate,
            'dividend_yield': self.dividend_yield,
            'fees': list(self.fees) if isinstance(self.fees, tuple) else self.fees,
            'penalties': list(self.penalties)
            if isinstance(self.penalties, tuple) else self.penalties,
            'age': self.age,
            'initial_fund': self.initial_fund
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return ElvaContract(
            self._maturity, self._floor_rate, self._cap_rate, self._dividend_yield,
            self._fees, self._penalties, self._age, self._initial_fund)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self._maturity, self._floor_rate, self._cap_rate, self._dividend_yield,
                self._fees, self._penalties, self._age, self._initial_fund)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, ElvaContract) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'ElvaContract: [maturity: {}] [g: {}] [c: {}]'.format(
            self.maturity, self.floor_rate, self.cap_rate)
