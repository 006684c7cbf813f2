# coding=utf-8
"""Uniform log-price grid of the hybrid pricer."""
from __future__ import division

import numpy as np

from ..config import folders


class LogPriceGrid(object):
    """Uniform grid of log fund values centered on the log of the initial fund.

    Args:
        center: A number for the log of the initial fund, which is a grid node.
        dy: A positive number for the grid step.
        half_count: A positive integer for the number of nodes on each side
            of the center.

    Properties:
        * y
        * dy
        * size
        * center_index
        * y_min
        * y_max
        * fund_values
    """
    __slots__ = ('_y', '_dy', '_center_index')

    def __init__(self, center, dy, half_count):
        """Initialize LogPriceGrid."""
        assert dy > 0, 'Grid step must be positive. Got {}.'.format(dy)
        assert half_count >= 1, 'Grid must have at least one node on each side.'
        self._dy = float(dy)
        self._center_index = int(half_count)
        self._y = center + self._dy * (np.arange(2 * half_count + 1) - half_count)
        self._y[self._center_index] = center
        self._y.flags.writeable = False

    @property
    def y(self):
        """Get a read-only array of the log fund values."""
        return self._y

    @property
    def dy(self):
        """Get the grid step."""
        return self._dy

    @property
    def size(self):
        """Get the number of grid nodes."""
        return len(self._y)

    @property
    def center_index(self):
        """Get the index of the node at the log of the initial fund."""
        return self._center_index

    @property
    def y_min(self):
        """Get the lowest log fund value."""
        return float(self._y[0])

    @property
    def y_max(self):
        """Get the highest log fund value."""
        return float(self._y[-1])

    @property
    def fund_values(self):
        """Get an array of the fund values exp(y)."""
        return np.exp(self._y)

    def interpolate(self, row, y_value):
        """Linearly interpolate a row of values at a log fund value."""
        return float(np.interp(y_value, self._y, row))

    def __len__(self):
        return len(self._y)

    def __repr__(self):
        return 'LogPriceGrid: [nodes: {}] [dy: {}] [{}, {}]'.format(
            self.size, self.dy, self.y_min, self.y_max)


def build_log_grid(contract, model, hw_params, config):
    """Build the log-price grid of a contract.

    The half width of the grid is config.half_width standard deviations of the
    log fund at maturity, combining the Levy variance and the variance of
    the integrated short rate.

    Args:
        contract: An ElvaContract.
        model: A Levy model.
        hw_params: A HullWhiteParams object.
        config: A HybridConfig.
    """
    maturity = contract.maturity
    variance = model.variance_rate * maturity + hw_params.integrated_variance(maturity)
    half_width = config.half_width * np.sqrt(variance)
    half_count = max(1, int(np.ceil(half_width / config.dy - 1e-9)))
    size = 2 * half_count + 1
    if size > folders.max_grid_points:
        raise ValueError('Log-price grid with {} nodes exceeds the configured '
                         'maximum of {} nodes.'.format(size, folders.max_grid_points))
    return LogPriceGrid(np.log(contract.initial_fund), config.dy, half_count)
