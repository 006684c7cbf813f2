# coding=utf-8
"""Values and surrender decisions over the rate nodes and log-price grid of a level."""
from __future__ import division

import os

import numpy as np

from ladybug.futil import preparedir


class ValueSurface(object):
    """Contract values at all the nodes of one tree level.

    Args:
        level: An integer for the tree level n.
        values: An array of shape (n + 1, grid size) where row j holds the
            values at rate node j.
        grid: The LogPriceGrid of the columns.

    Properties:
        * level
        * values
        * grid
        * node_count
    """
    __slots__ = ('_level', '_values', '_grid')

    def __init__(self, level, values, grid):
        """Initialize ValueSurface."""
        values = np.asarray(values, dtype=float)
        assert values.shape == (level + 1, grid.size), 'Expected values of shape ' \
            '{} for level {}. Got {}.'.format((level + 1, grid.size), level, values.shape)
        self._level, self._values, self._grid = int(level), values, grid

    @property
    def level(self):
        """Get the tree level of the surface."""
        return self._level

    @property
    def values(self):
        """Get the array of values with one row per rate node."""
        return self._values

    @property
    def grid(self):
        """Get the LogPriceGrid of the columns."""
        return self._grid

    @property
    def node_count(self):
        """Get the number of rate nodes."""
        return self._level + 1

    def is_valid(self):
        """Get a boolean for whether all values are finite and nonnegative."""
        return bool(np.all(np.isfinite(self._values)) and np.all(self._values >= 0))

    def to_csv(self, file_path):
        """Write the surface to a CSV file with rows of (n, j, i, value).

        Args:
            file_path: The path of the CSV file to write.
        """
        preparedir(os.path.dirname(os.path.abspath(file_path)), remove_content=False)
        nodes, cols = np.indices(self._values.shape)
        table = np.column_stack((
            np.full(self._values.size, self._level), nodes.ravel(), cols.ravel(),
            self._values.ravel()))
        np.savetxt(file_path, table, delimiter=',', header='n,j,i,value',
                   comments='', fmt=['%d', '%d', '%d', '%.17g'])
        return file_path

    def __repr__(self):
        return 'ValueSurface: [level: {}] [nodes: {}]'.format(
            self.level, self.node_count)


class ExerciseRegion(object):
    """Surrender decisions at the rate nodes and fund values of an anniversary.

    Args:
        anniversary: An integer for the anniversary m.
        fund_values: An array of the fund values of the grid.
        rates: An array of the short rates of the tree nodes at the anniversary.
        optimal: A boolean array of shape (len(rates), len(fund_values)) that
            is True where surrendering is optimal.
        reachable: An optional boolean array with one value per rate that is
            True where the tree reaches the node with a positive probability.
            If None, every node is reachable. (Default: None).

    Properties:
        * anniversary
        * fund_values
        * rates
        * optimal
        * reachable
        * is_empty
    """
    __slots__ = ('_anniversary', '_fund_values', '_rates', '_optimal', '_reachable')

    def __init__(self, anniversary, fund_values, rates, optimal, reachable=None):
        """Initialize ExerciseRegion."""
        optimal = np.asarray(optimal, dtype=bool)
        assert optimal.shape == (len(rates), len(fund_values)), 'Exercise region ' \
            'shape {} does not match the rates and fund values.'.format(optimal.shape)
        reachable = np.ones(len(rates), dtype=bool) if reachable is None \
            else np.asarray(reachable, dtype=bool)
        assert reachable.shape == (len(rates),), 'Expected {} reachable flags. ' \
            'Got {}.'.format(len(rates), reachable.shape)
        self._anniversary = int(anniversary)
        self._fund_values = np.asarray(fund_values, dtype=float)
        self._rates = np.asarray(rates, dtype=float)
        self._optimal = optimal
        self._reachable = reachable

    @property
    def anniversary(self):
        """Get the anniversary of the region."""
        return self._anniversary

    @property
    def fund_values(self):
        """Get the array of fund values."""
        return self._fund_values

    @property
    def rates(self):
        """Get the array of short rates."""
        return self._rates

    @property
    def optimal(self):
        """Get the boolean array with one row per short rate."""
        return self._optimal

    @property
    def reachable(self):
        """Get the boolean array that is True at the rate nodes the tree reaches."""
        return self._reachable

    @property
    def is_empty(self):
        """Get a boolean for whether surrendering is never optimal."""
        return not bool(np.any(self._optimal[self._reachable]))

    def rate_violations(self):
        """Get the number of reachable points where a higher rate stops the surrender.

        A point counts when surrendering is optimal at its rate but not at the
        next higher reachable rate with the same fund value.
        """
        order = np.argsort(self._rates[self._reachable], kind='stable')
        optimal = self._optimal[self._reachable][order]
        return int(np.sum(optimal[:-1] & ~optimal[1:]))

    def to_csv(self, file_path):
        """Write the reachable rows to a CSV file of (F, r, surrender_optimal).

        Args:
            file_path: The path of the CSV file to write.
        """
        preparedir(os.path.dirname(os.path.abspath(file_path)), remove_content=False)
        funds, rates = np.meshgrid(self._fund_values, self._rates[self._reachable])
        table = np.column_stack((funds.ravel(), rates.ravel(),
                                 self._optimal[self._reachable].ravel().astype(int)))
        np.savetxt(file_path, table, delimiter=',', header='F,r,surrender_optimal',
                   comments='', fmt=['%.17g', '%.17g', '%d'])
        return file_path

    def __repr__(self):
        return 'ExerciseRegion: [anniversary: {}] [optimal points: {}]'.format(
            self.anniversary, int(self._optimal[self._reachable].sum()))
