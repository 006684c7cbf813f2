# coding=utf-8
"""Implicit-explicit time step of the log-price PIDE at a frozen short rate."""
from __future__ import division

import numpy as np
from scipy.linalg import solve_banded
from scipy.signal import fftconvolve

FFT_STENCIL = 128


class ImexOperator(object):
    """Backward time step of the pricing PIDE on a log-price grid.

    Diffusion, advection and the shortest jumps are implicit in a banded
    system. The remaining jumps are an explicit convolution that extends
    the row with its end values. The short rate is constant over the step,
    so discounting is the exact factor exp(-r dt) applied to the solution.

    Args:
        grid: A LogPriceGrid.
        jumps: A JumpDiscretization with the same step as the grid.
        model: The Levy model of the jumps.
        dividend: A number for the effective dividend yield over the step.
        dt: A positive number for the time step in years.
        band: An optional integer for the number of implicit jump offsets on
            each side. If None, the smallest band that keeps the explicit
            jumps stable is used. (Default: None).

    Properties:
        * grid
        * jumps
        * dt
        * dividend
        * band
        * explicit_intensity
    """
    __slots__ = ('_grid', '_jumps', '_dt', '_dividend', '_diffusion', '_base_drift',
                 '_band', '_near', '_far', '_far_intensity', '_left_tail',
                 '_right_tail')

    def __init__(self, grid, jumps, model, dividend, dt, band=None):
        """Initialize ImexOperator."""
        assert dt > 0, 'Time step must be positive. Got {}.'.format(dt)
        assert abs(jumps.dy - grid.dy) <= 1e-12 * grid.dy, 'Jump discretization ' \
            'step {} does not match the grid step {}.'.format(jumps.dy, grid.dy)
        self._grid, self._jumps = grid, jumps
        self._dt, self._dividend = float(dt), float(dividend)
        variance = model.diffusion_variance + jumps.sigma_eps_sq
        self._diffusion = 0.5 * variance
        self._base_drift = -self._dividend - 0.5 * variance - jumps.drift_comp

        half, size = jumps.half_width, grid.size
        band = jumps.implicit_band(dt) if band is None else int(band)
        band = max(0, min(band, half, size - 1))
        self._band = band
        weights = jumps.weights
        self._near = np.array(weights[half - band:half + band + 1])
        self._near[band] = 0.0
        self._far = np.array(weights)
        self._far[half - band:half + band + 1] = 0.0
        self._far_intensity = float(self._far.sum())

        # intensity of the implicit jumps that leave the grid from each row
        self._left_tail = np.zeros(size)
        self._right_tail = np.zeros(size)
        for k in range(1, band + 1):
            self._left_tail[:k] += self._near[band - k]
            self._right_tail[size - k:] += self._near[band + k]

    @property
    def grid(self):
        """Get the LogPriceGrid of the operator."""
        return self._grid

    @property
    def jumps(self):
        """Get the JumpDiscretization of the operator."""
        return self._jumps

    @property
    def dt(self):
        """Get the time step in years."""
        return self._dt

    @property
    def dividend(self):
        """Get the effective dividend yield over the step."""
        return self._dividend

    @property
    def band(self):
        """Get the number of implicit jump offsets on each side."""
        return self._band

    @property
    def explicit_intensity(self):
        """Get the total intensity of the explicit jumps."""
        return self._far_intensity

    def banded_matrix(self, rate):
        """Get the implicit system in the banded storage of scipy solve_banded.

        Args:
            rate: A number for the short rate over the step.

        Returns:
            An array of shape (2 * b + 1, size) with b = max(band, 1).
        """
        dt, dy, size = self._dt, self._grid.dy, self._grid.size
        adv = rate + self._base_drift
        diff = self._diffusion / (dy * dy)
        if abs(adv) * dy <= 2 * self._diffusion:  # central differences
            lower, upper = diff - adv / (2 * dy), diff + adv / (2 * dy)
        elif adv > 0:  # upwind
            lower, upper = diff, diff + adv / dy
        else:
            lower, upper = diff - adv / dy, diff
        assert lower >= 0 and upper >= 0, 'Negative off-diagonal coefficients ' \
            'in the IMEX system.'

        width = max(self._band, 1)
        coeffs = np.zeros(2 * width + 1)
        if self._band:
            coeffs[width - self._band:width + self._band + 1] = self._near
        coeffs[width - 1] += lower
        coeffs[width + 1] += upper
        ab = np.empty((2 * width + 1, size))
        for k in range(-width, width + 1):
            ab[width - k, :] = -dt * coeffs[width + k]
        ab[width, :] = 1 + dt * coeffs.sum()

        # Dirichlet rows at both ends of the grid
        for k in range(1, width + 1):
            if k < size:
                ab[width - k, k] = 0.0
                ab[width + k, size - 1 - k] = 0.0
        ab[width, 0] = ab[width, size - 1] = 1.0
        return ab

    def explicit_jumps(self, row):
        """Get the explicit jump term sum_k w_k v_{i+k} - lambda v_i of a row.

        The row is extended with its end values beyond the grid.
        """
        if self._far_intensity == 0:
            return np.zeros(len(row))
        half = self._jumps.half_width
        padded = np.concatenate((np.full(half, row[0]), row, np.full(half, row[-1])))
        if len(self._far) > FFT_STENCIL:
            conv = fftconvolve(padded, self._far[::-1], mode='valid')
        else:
            conv = np.correlate(padded, self._far, mode='valid')
        return conv - self._far_intensity * row

    def step(self, row, rate, boundary=None):
        """Step a row of values back by dt at a frozen short rate.

        Args:
            row: An array of values on the grid at the end of the step.
            rate: A number for the short rate over the step.
            boundary: An optional tuple with the values of the first and the
                last grid nodes at the start of the step. If None, the end
                values of the row are discounted. (Default: None).

        Returns:
            An array of values on the grid at the start of the step.
        """
        row = np.asarray(row, dtype=float)
        assert len(row) == self._grid.size, 'Expected a row of {} values. ' \
            'Got {}.'.format(self._grid.size, len(row))
        disc = np.exp(-rate * self._dt)
        if boundary is None:
            lo, hi = row[0] * disc, row[-1] * disc
        else:
            lo, hi = boundary
        lo, hi = lo / disc, hi / disc

        rhs = row + self._dt * self.explicit_jumps(row)
        if self._band:
            rhs += self._dt * (self._left_tail * lo + self._right_tail * hi)
        rhs[0], rhs[-1] = lo, hi
        width = max(self._band, 1)
        values = solve_banded((width, width), self.banded_matrix(rate), rhs,
                              check_finite=False)
        return values * disc

    def __repr__(self):
        return 'ImexOperator: [dt: {}] [implicit band: {}]'.format(self.dt, self.band)


def imex_step(row, grid, rate, dividend, jumps, model, dt, boundary=None):
    """Step a row of values back by dt with the IMEX scheme at a frozen short rate.

    Args:
        row: An array of values on the grid at the end of the step.
        grid: A LogPriceGrid.
        rate: A number for the short rate over the step.
        dividend: A number for the effective dividend yield over the step.
        jumps: A JumpDiscretization with the same step as the grid.
        model: The Levy model of the jumps.
        dt: A positive number for the time step in years.
        boundary: An optional tuple with the values of the end nodes at the
            start of the step. (Default: None).
    """
    return ImexOperator(grid, jumps, model, dividend, dt).step(row, rate, boundary)
