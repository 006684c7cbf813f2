# coding=utf-8
"""Recombining multiple-jumps binomial lattice for the Hull-White factor."""
from __future__ import division

import logging

import numpy as np

from ..config import folders

_logger = logging.getLogger(__name__)

SNAP_TOLERANCE = 1e-9


class RateTree(object):
    """Binomial lattice of the Ornstein-Uhlenbeck factor of the short rate.

    Node j of level n carries the factor value R = (2 j - n) sqrt(dt). From each
    node, the factor moves to an up node j_u >= j + 1 or a down node j_d <= j of
    the next level, which are searched so that the one-step mean matches the
    mean reverting drift -k R dt.

    Args:
        params: A HullWhiteParams object.
        maturity: An integer for the number of years covered by the tree.
        steps_per_year: An integer for the number of time steps per year.

    Properties:
        * params
        * maturity
        * steps_per_year
        * dt
        * n_steps
    """
    __slots__ = ('_params', '_maturity', '_steps_per_year', '_dt', '_n_steps',
                 '_up', '_down', '_p_up', '_rates')

    def __init__(self, params, maturity, steps_per_year):
        """Initialize RateTree."""
        n_steps = int(maturity) * int(steps_per_year)
        assert int(maturity) >= 1 and int(steps_per_year) >= 1, 'Rate tree maturity ' \
            'and steps per year must be positive integers.'
        if n_steps > folders.max_tree_steps:
            raise ValueError(
                'Rate tree with {} steps exceeds the configured maximum of {} '
                'steps.'.format(n_steps, folders.max_tree_steps))
        self._params = params
        self._maturity = int(maturity)
        self._steps_per_year = int(steps_per_year)
        self._dt = 1.0 / self._steps_per_year
        self._n_steps = n_steps
        self._build()

    def _build(self):
        dt, k, sigma = self._dt, self._params.k, self._params.sigma
        sq_dt = np.sqrt(dt)
        self._up, self._down, self._p_up = [], [], []
        self._rates = []
        for n in range(self._n_steps + 1):
            nodes = self.node_values(n)
            self._rates.append(sigma * nodes + self._params.beta(n * dt))
            if n == self._n_steps:
                break
            j = np.arange(n + 1)
            target = nodes * (1 - k * dt)
            # fractional index of the target on level n + 1
            x = (target / sq_dt + n + 1) / 2
            snapped = np.round(x)
            x = np.where(np.abs(x - snapped) < SNAP_TOLERANCE, snapped, x)
            j_up = np.minimum(np.maximum(j + 1, np.ceil(x)), n + 1).astype(int)
            j_down = np.maximum(np.minimum(j, np.floor(x)), 0).astype(int)
            r_up = (2 * j_up - n - 1) * sq_dt
            r_down = (2 * j_down - n - 1) * sq_dt
            p_up = np.clip((target - r_down) / (r_up - r_down), 0.0, 1.0)
            self._up.append(j_up)
            self._down.append(j_down)
            self._p_up.append(p_up)
        _logger.debug('Built rate tree with %d levels.', self._n_steps + 1)

    @property
    def params(self):
        """Get the HullWhiteParams of the tree."""
        return self._params

    @property
    def maturity(self):
        """Get the number of years covered by the tree."""
        return self._maturity

    @property
    def steps_per_year(self):
        """Get the number of time steps per year."""
        return self._steps_per_year

    @property
    def dt(self):
        """Get the time step in years."""
        return self._dt

    @property
    def n_steps(self):
        """Get the total number of time steps."""
        return self._n_steps

    def node_values(self, n):
        """Get an array of the factor values R of the nodes at level n."""
        return (2 * np.arange(n + 1) - n) * np.sqrt(self._dt)

    def short_rates(self, n):
        """Get an array of the short rates of the nodes at level n."""
        return self._rates[n]

    def up_index(self, n):
        """Get an array of the up-node indices for the transitions from level n."""
        return self._up[n]

    def down_index(self, n):
        """Get an array of the down-node indices for the transitions from level n."""
        return self._down[n]

    def up_probability(self, n):
        """Get an array of the up-move probabilities for the transitions from level n.
        """
        return self._p_up[n]

    def discount_from(self, n, n_end):
        """Get the price at each node of level n of a unit paid at level n_end.

        Args:
            n: An integer for the level where the prices are computed.
            n_end: An integer for the payment level, greater than or equal to n.
        """
        assert 0 <= n <= n_end <= self._n_steps, 'Invalid levels for discounting: ' \
            '{} to {}.'.format(n, n_end)
        values = np.ones(n_end + 1)
        for level in range(n_end - 1, n - 1, -1):
            p_up = self._p_up[level]
            values = np.exp(-self._rates[level] * self._dt) * (
                p_up * values[self._up[level]] +
                (1 - p_up) * values[self._down[level]])
        return values

    def zero_coupon_price(self, maturity):
        """Get the tree price at the root of a zero-coupon bond.

        Args:
            maturity: A number for the bond maturity in years. It is rounded to
                the nearest tree level.
        """
        n_end = int(round(maturity * self._steps_per_year))
        return float(self.discount_from(0, n_end)[0])

    def probabilities(self, n):
        """Get the probabilities of reaching each node of level n from the root."""
        probs = np.ones(1)
        for level in range(n):
            nxt = np.zeros(level + 2)
            p_up = self._p_up[level]
            np.add.at(nxt, self._up[level], probs * p_up)
            np.add.at(nxt, self._down[level], probs * (1 - p_up))
            probs = nxt
        return probs

    def moments(self, n):
        """Get the lattice mean and variance of the factor R at level n."""
        probs = self.probabilities(n)
        nodes = self.node_values(n)
        mean = float(np.dot(probs, nodes))
        return mean, float(np.dot(probs, (nodes - mean) ** 2))

    def __repr__(self):
        return 'RateTree: [maturity: {}] [steps per year: {}]'.format(
            self._maturity, self._steps_per_year)


def build_rate_tree(params, maturity, steps_per_year):
    """Build the short rate lattice of a Hull-White model.

    Args:
        params: A HullWhiteParams object.
        maturity: An integer for the number of years covered by the tree.
        steps_per_year: An integer for the number of time steps per year.
    """
    return RateTree(params, maturity, steps_per_year)
