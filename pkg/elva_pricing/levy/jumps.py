# coding=utf-8
"""Discretization of the Levy measure on the stencil of a log-price grid."""
from __future__ import division

import logging

import numpy as np

_logger = logging.getLogger(__name__)

GEOMETRY_TOLERANCE = 1e-9
MAX_SUBDIVISIONS = 64


class JumpDiscretization(object):
    """Jump intensities of a Levy measure on an integer-offset grid stencil.

    Args:
        weights: An array of length 2 * K + 1 with the intensity of the jumps
            landing k grid steps away, for k from -K to K. The entry at offset
            0 must be 0.
        dy: The grid step in log-price units.
        eps: The small-jump cutoff. Jumps below it are in sigma_eps_sq.
        bound: The large-jump truncation bound.
        sigma_eps_sq: The variance rate of the jumps smaller than eps.

    Properties:
        * weights
        * offsets
        * half_width
        * dy
        * eps
        * bound
        * sigma_eps_sq
        * lambda_eps
        * drift_comp
    """
    __slots__ = ('_weights', '_dy', '_eps', '_bound', '_sigma_eps_sq',
                 '_lambda_eps', '_drift_comp')

    def __init__(self, weights, dy, eps, bound, sigma_eps_sq):
        """Initialize JumpDiscretization."""
        weights = np.array(weights, dtype=float)
        assert weights.ndim == 1 and len(weights) % 2 == 1, \
            'Jump weights must be a 1D array of odd length.'
        assert np.all(weights >= 0), 'Jump weights must be nonnegative.'
        assert sigma_eps_sq >= 0, 'Small-jump variance must be nonnegative.'
        self._weights = weights
        self._weights.flags.writeable = False
        self._dy = float(dy)
        self._eps = float(eps)
        self._bound = float(bound)
        self._sigma_eps_sq = float(sigma_eps_sq)
        self._lambda_eps = float(weights.sum())
        self._drift_comp = float(np.dot(weights, np.expm1(self.offsets * self._dy)))

    @property
    def weights(self):
        """Get a read-only array of jump intensities for offsets -K to K."""
        return self._weights

    @property
    def offsets(self):
        """Get an array of the integer offsets matching the weights."""
        half = self.half_width
        return np.arange(-half, half + 1)

    @property
    def half_width(self):
        """Get the integer K of the widest jump on the stencil."""
        return len(self._weights) // 2

    @property
    def dy(self):
        """Get the grid step."""
        return self._dy

    @property
    def eps(self):
        """Get the small-jump cutoff."""
        return self._eps

    @property
    def bound(self):
        """Get the large-jump truncation bound."""
        return self._bound

    @property
    def sigma_eps_sq(self):
        """Get the variance rate of the jumps smaller than eps."""
        return self._sigma_eps_sq

    @property
    def lambda_eps(self):
        """Get the total intensity of the jumps on the stencil."""
        return self._lambda_eps

    @property
    def drift_comp(self):
        """Get the compensation drift sum_k w_k (exp(k dy) - 1)."""
        return self._drift_comp

    def implicit_band(self, dt):
        """Get the smallest offset K such that the jumps beyond it are explicit-stable.

        The jumps with offsets in [-K, K] are treated implicitly and the
        remaining ones satisfy dt * sum(w_k, |k| > K) <= 1.

        Args:
            dt: The time step in years.
        """
        half = self.half_width
        if dt * self._lambda_eps <= 1:
            return 0
        pair = self._weights[half + 1:] + self._weights[half - 1::-1]
        far = self._lambda_eps - np.cumsum(pair)
        stable = np.flatnonzero(dt * far <= 1 + 1e-12)
        return int(stable[0]) + 1 if len(stable) else half

    def __repr__(self):
        return 'JumpDiscretization: [K: {}] [lambda_eps: {}] [sigma_eps_sq: {}]'.format(
            self.half_width, self.lambda_eps, self.sigma_eps_sq)


def _grid_steps(value, dy, name):
    """Get the number of grid steps in a value that must be a multiple of dy."""
    steps = value / dy
    if abs(steps - round(steps)) > GEOMETRY_TOLERANCE * max(1.0, steps):
        raise ValueError('Jump {} of {} is not an integer multiple of the grid '
                         'step {}.'.format(name, value, dy))
    return int(round(steps))


def _cell_integrals(model, lo, hi):
    """Integrate the Levy density over cells [lo, hi] with adaptive midpoint rules."""
    width = hi - lo
    active = width > 0
    result = np.zeros(len(lo))
    if not np.any(active):
        return result
    lo, width = lo[active], width[active]
    prev = model.levy_density(lo + 0.5 * width) * width
    done = np.zeros(len(lo), dtype=bool)
    final = prev.copy()
    count = 2
    while count <= MAX_SUBDIVISIONS and not np.all(done):
        nodes = lo[:, None] + (np.arange(count) + 0.5)[None, :] / count * width[:, None]
        est = model.levy_density(nodes).mean(axis=1) * width
        converged = ~done & (np.abs(est - prev) <= 1e-12 + 1e-9 * np.abs(est))
        final = np.where(done, final, est)
        done |= converged
        prev = est
        count *= 2
    result[active] = final
    return result


def discretize_jumps(model, dy, eps=None, bound=None):
    """Discretize the Levy measure of a model on the stencil of a log-price grid.

    The jump of k grid steps receives the intensity of the cell
    [(k - 1/2) dy, (k + 1/2) dy] clipped to eps <= |y| <= bound. Jumps smaller
    than eps enter the diffusion through sigma_eps_sq and jumps larger than
    bound are dropped.

    Args:
        model: A Levy model.
        dy: A positive number for the grid step.
        eps: An optional small-jump cutoff that is a multiple of dy. If None,
            it will be equal to dy. (Default: None).
        bound: An optional truncation bound that is a multiple of dy. If None,
            the model truncation_bound snapped to the grid is used. (Default: None).

    Returns:
        A JumpDiscretization.
    """
    assert dy > 0, 'Grid step must be positive. Got {}.'.format(dy)
    eps = dy if eps is None else eps
    bound = model.truncation_bound(dy=dy) if bound is None else bound
    if not 0 < eps <= bound:
        raise ValueError('Jump cutoffs must satisfy 0 < eps <= bound. '
                         'Got eps = {} and bound = {}.'.format(eps, bound))
    _grid_steps(eps, dy, 'cutoff')
    k_bound = _grid_steps(bound, dy, 'bound')

    weights = np.zeros(2 * k_bound + 1)
    if k_bound > 0:
        steps = np.arange(1, k_bound + 1)
        lo = np.maximum(eps, (steps - 0.5) * dy)
        hi = np.minimum(bound, (steps + 0.5) * dy)
        positive = _cell_integrals(model, lo, hi)
        negative = _cell_integrals(model, -hi, -lo)
        weights[k_bound + 1:] = positive
        weights[:k_bound] = negative[::-1]

    sigma_eps_sq = model.small_jump_variance(eps)
    jumps = JumpDiscretization(weights, dy, eps, bound, sigma_eps_sq)
    _logger.debug('Discretized %s jumps: %s', model.display_name, jumps)
    return jumps
