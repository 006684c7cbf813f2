# coding=utf-8
"""Mortality tables of the death probability mass per contract year."""
from __future__ import division

import csv

import numpy as np

from fairyfly._lockable import lockable

CUMULATIVE_TOLERANCE = 1e-12


@lockable
class MortalityTable(object):
    """Probability mass of death in each year after inception.

    Args:
        masses: A list of numbers where the item m - 1 is the probability that
            death occurs in the year (m - 1, m]. Years beyond the list have a
            probability of 0.
        age: An optional integer for the age at inception of the table. It is
            used to shift the table to the age of a contract. (Default: None).

    Properties:
        * masses
        * age
        * cumulative
    """
    __slots__ = ('_masses', '_age', '_cumulative', '_locked')

    def __init__(self, masses, age=None):
        """Initialize MortalityTable."""
        self._locked = False
        values = np.array(masses, dtype=float)
        if values.ndim != 1:
            raise ValueError('Mortality masses must be a flat list of numbers.')
        for i, val in enumerate(values):
            if not val >= 0:
                raise ValueError('Mortality mass of year {} must be greater than or '
                                 'equal to 0. Got {}.'.format(i + 1, val))
        cumulative = np.cumsum(values)
        over = np.flatnonzero(cumulative > 1 + CUMULATIVE_TOLERANCE)
        if len(over) != 0:
            raise ValueError(
                'Mortality masses sum to {} at year {}, which exceeds 1.'.format(
                    cumulative[over[0]], over[0] + 1))
        values.flags.writeable = False
        cumulative.flags.writeable = False
        self._masses = values
        self._cumulative = cumulative
        self._age = None if age is None else int(age)

    @property
    def masses(self):
        """Get an array of the death probabilities for years 1, 2, ..."""
        return self._masses

    @property
    def age(self):
        """Get the age at inception of the table or None."""
        return self._age

    @property
    def cumulative(self):
        """Get an array of the probabilities of death before the end of each year."""
        return self._cumulative

    def death_probability(self, m):
        """Get the probability that death occurs in the year (m - 1, m]."""
        assert m >= 1, 'Mortality year must be at least 1. Got {}.'.format(m)
        return float(self._masses[m - 1]) if m <= len(self._masses) else 0.0

    def survival(self, m):
        """Get the probability to be alive at time m."""
        if m <= 0:
            return 1.0
        idx = min(m, len(self._masses)) - 1
        return max(0.0, 1.0 - float(self._cumulative[idx])) if idx >= 0 else 1.0

    def conditional_death_probability(self, m):
        """Get the probability of death in (m - 1, m] for someone alive at m - 1.

        Args:
            m: An integer greater than or equal to 1.
        """
        alive = self.survival(m - 1)
        if alive <= 0:
            raise ValueError('Survival probability to year {} is {}. Conditional '
                             'death probabilities are undefined.'.format(m - 1, alive))
        return min(1.0, self.death_probability(m) / alive)

    def shifted(self, years):
        """Get the table of someone who inherits this table after some years.

        Args:
            years: A non-negative integer for the number of years to shift.
        """
        years = int(years)
        assert years >= 0, 'Mortality table shift must be non-negative.'
        if years == 0:
            return self
        alive = self.survival(years)
        if alive <= 0:
            raise ValueError('Survival probability to year {} is {}. The table '
                             'cannot be shifted.'.format(years, alive))
        masses = self._masses[years:] / alive
        age = None if self._age is None else self._age + years
        return MortalityTable(np.minimum(masses, 1.0), age)

    def for_age(self, age):
        """Get the table shifted to a given age at inception.

        Args:
            age: An integer for the age at inception. Tables without an age
                are assumed to already match it.
        """
        if self._age is None or age == self._age:
            return self
        if age < self._age:
            raise ValueError('Mortality table starts at age {} and cannot be used '
                             'for age {}.'.format(self._age, age))
        return self.shifted(age - self._age)

    @classmethod
    def from_gompertz_makeham(cls, age, a=0.00022, b=2.7e-6, c=1.124, horizon=None):
        """Create a table from the Gompertz-Makeham force of mortality a + b c^x.

        Args:
            age: An integer for the age at inception.
            a: The age-independent part of the force of mortality.
            b: The scale of the age-dependent part of the force of mortality.
            c: The growth factor per year of the age-dependent part.
            horizon: An optional integer for the number of years in the table.
                If None, the table runs to age 120.
        """
        horizon = max(1, 120 - int(age)) if horizon is None else int(horizon)
        t = np.arange(horizon + 1)
        survival = np.exp(-a * t - b * c ** age * (c ** t - 1) / np.log(c))
        return cls(-np.diff(survival), age)

    @classmethod
    def from_csv(cls, file_path, age=None):
        """Create a table from a CSV file with a header row and rows of (m, p_m).

        Args:
            file_path: Path to the CSV file. Years must start at 1 and increase by 1.
            age: An optional integer for the age at inception of the table.
        """
        masses = []
        with open(file_path, 'r') as inf:
            reader = csv.reader(inf)
            for row_i, row in enumerate(reader):
                if row_i == 0 or not row or not ''.join(row).strip():
                    continue  # header or blank row
                try:
                    year, mass = int(row[0]), float(row[1])
                except (IndexError, ValueError):
                    raise ValueError('Mortality file "{}" row {} could not be parsed '
                                     'as a year and a probability: {}'.format(
                                         file_path, row_i + 1, row))
                if year != len(masses) + 1:
                    raise ValueError('Mortality file "{}" row {} has year {} but {} '
                                     'was expected.'.format(
                                         file_path, row_i + 1, year, len(masses) + 1))
                if mass < 0:
                    raise ValueError('Mortality file "{}" row {} has a negative '
                                     'probability of {}.'.format(
                                         file_path, row_i + 1, mass))
                masses.append(mass)
        return cls(masses, age)

    @classmethod
    def from_dict(cls, data):
        """Create a MortalityTable from a dictionary.

        .. code-block:: python

            {"type": "MortalityTable", "masses": [0.001, 0.0012], "age": 30}
        """
        assert data['type'] == 'MortalityTable', \
            'Expected MortalityTable. Got {}.'.format(data['type'])
        age = data['age'] if 'age' in data else None
        return cls(data['masses'], age)

    def to_dict(self):
        """MortalityTable dictionary representation."""
        return {'type': 'MortalityTable', 'masses': self._masses.tolist(),
                'age': self._age}

    def duplicate(self):
        """Get a copy of this object."""
        return MortalityTable(self._masses, self._age)

    def __len__(self):
        return len(self._masses)

    def __repr__(self):
        return 'MortalityTable: [years: {}] [age: {}]'.format(len(self), self._age)


def load_mortality(file_path, age=None):
    """Load a MortalityTable from a CSV file of (m, p_m) rows.

    Args:
        file_path: Path to a CSV file with a header row.
        age: An optional integer for the age at inception of the table.
    """
    return MortalityTable.from_csv(file_path, age)


def conditional_death_prob(table, omega, m):
    """Get the probability of death in (m - 1, m] given survival to m - 1.

    Args:
        table: A MortalityTable.
        omega: An integer for the age of the policyholder at inception.
        m: An integer greater than or equal to 1.
    """
    return table.for_age(omega).conditional_death_probability(m)
