# coding=utf-8
"""Exact simulation of the Hull-White short rate and its integral at anniversaries."""
from __future__ import division

import numpy as np


def sample_rate_paths(params, maturity, n_paths, rng, step=1.0):
    """Sample the short rate and its integral on an evenly spaced time grid.

    The pair made of the Ornstein-Uhlenbeck factor at the end of each step and
    its integral over the step is jointly Gaussian, so it is drawn exactly
    from its conditional mean and covariance.

    Args:
        params: A HullWhiteParams object.
        maturity: An integer for the number of steps to simulate.
        n_paths: A positive integer for the number of paths.
        rng: A numpy Generator supplying the random numbers.
        step: A number for the length of each step in years. (Default: 1).

    Returns:
        A tuple with two arrays of shape (maturity + 1, n_paths). The first
        holds the short rates r_m and the second the integrals I_m of the
        short rate from 0 to m * step.
    """
    assert n_paths >= 1, 'Number of paths must be positive. Got {}.'.format(n_paths)
    decay, int_factor, var_r, var_int, cov = params.factor_moments(step)
    sd_r = np.sqrt(var_r)
    loading = cov / sd_r
    residual = np.sqrt(max(var_int - loading * loading, 0.0))
    sigma = params.sigma

    rates = np.empty((maturity + 1, n_paths))
    integrals = np.empty((maturity + 1, n_paths))
    factor = np.zeros(n_paths)
    rates[0] = params.beta(0.0)
    integrals[0] = 0.0
    for m in range(maturity):
        shocks = rng.standard_normal((2, n_paths))
        factor_int = factor * int_factor + loading * shocks[0] + residual * shocks[1]
        factor = factor * decay + sd_r * shocks[0]
        t_start, t_end = m * step, (m + 1) * step
        rates[m + 1] = sigma * factor + params.beta(t_end)
        integrals[m + 1] = integrals[m] + sigma * factor_int + \
            params.integrated_beta(t_start, t_end)
    return rates, integrals
