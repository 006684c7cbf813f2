# coding=utf-8
"""Hybrid pricer that rolls a log-price PIDE back on the nodes of a short rate tree.

Between two anniversaries the value surface is averaged over the tree
transitions of each level and stepped back with the IMEX scheme at the node
rate. At every anniversary before maturity, mortality and surrender are
applied pointwise to the surface.
"""
from __future__ import division

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..levy.jumps import discretize_jumps
from ..mortality import conditional_death_prob
from ..rate.tree import build_rate_tree
from ..result import PriceResult
from .grid import build_log_grid
from .imex import ImexOperator
from .surface import ValueSurface, ExerciseRegion

_logger = logging.getLogger(__name__)

MODES = ('surrender', 'no_surrender')


def boundary_update(surface, tree, n):
    """Get the values of the first and last grid nodes at level n.

    They are the tree-discounted expectations of the boundary columns of the
    surface at level n + 1.

    Args:
        surface: A ValueSurface at level n + 1.
        tree: The RateTree of the surface.
        n: An integer for the level of the new boundary values.

    Returns:
        A tuple of two arrays with one value per node of level n for the first
        and the last grid node.
    """
    assert surface.level == n + 1, 'Expected a surface at level {}. Got level ' \
        '{}.'.format(n + 1, surface.level)
    values, p_up = surface.values, tree.up_probability(n)
    up, down = tree.up_index(n), tree.down_index(n)
    disc = np.exp(-tree.short_rates(n) * tree.dt)
    lo = disc * (p_up * values[up, 0] + (1 - p_up) * values[down, 0])
    hi = disc * (p_up * values[up, -1] + (1 - p_up) * values[down, -1])
    return lo, hi


def rollback_interval(surface, tree, grid, contract, model, m, jumps, executor=None):
    """Roll a surface back from anniversary m + 1 to anniversary m.

    Args:
        surface: A ValueSurface at level (m + 1) * steps_per_year.
        tree: The RateTree of the contract.
        grid: The LogPriceGrid of the surface.
        contract: The ElvaContract, which supplies the fee of year m.
        model: The Levy model of the fund.
        m: An integer for the anniversary at the start of the interval.
        jumps: The JumpDiscretization of the model on the grid.
        executor: An optional concurrent.futures executor used to step the
            rows of each level in parallel. (Default: None).

    Returns:
        A ValueSurface at level m * steps_per_year.
    """
    per_year = tree.steps_per_year
    start, end = (m + 1) * per_year, m * per_year
    assert surface.level == start, 'Expected a surface at level {}. Got level ' \
        '{}.'.format(start, surface.level)
    operator = ImexOperator(grid, jumps, model, contract.effective_dividend(m), tree.dt)
    for n in range(start - 1, end - 1, -1):
        lo, hi = boundary_update(surface, tree, n)
        values, p_up = surface.values, tree.up_probability(n)[:, None]
        average = p_up * values[tree.up_index(n)] + \
            (1 - p_up) * values[tree.down_index(n)]
        rates = tree.short_rates(n)

        def _step_row(j):
            return operator.step(average[j], rates[j], (lo[j], hi[j]))

        if executor is None:
            rows = [_step_row(j) for j in range(n + 1)]
        else:
            rows = list(executor.map(_step_row, range(n + 1)))
        surface = ValueSurface(n, np.vstack(rows), grid)
    return surface


def surrender_decisions(surface, contract, m):
    """Get a boolean array that is True where surrendering at m is optimal.

    Surrender is optimal where the surrender benefit is positive and at
    least equal to the continuation value of the surface.
    """
    benefit = contract.surrender_benefit(m, surface.grid.fund_values)
    return (benefit > 0) & (benefit >= surface.values)


def anniversary_update(surface, contract, mortality, m):
    """Apply the death benefit and the surrender option at anniversary m.

    Args:
        surface: A ValueSurface at level m * steps_per_year.
        contract: The ElvaContract.
        mortality: The MortalityTable of the policyholder.
        m: An integer for the anniversary. No update happens at m = 0.

    Returns:
        A new ValueSurface with the values of the contract at anniversary m.
    """
    if m == 0:
        return surface
    funds = surface.grid.fund_values
    death = conditional_death_prob(mortality, contract.age, m)
    benefit = contract.death_benefit(m, funds)
    alive = np.maximum(contract.surrender_benefit(m, funds), surface.values)
    values = death * benefit + (1 - death) * alive
    return ValueSurface(surface.level, values, surface.grid)


def _backward_pass(contract, model, hw_params, config, mortality, anniversaries=(),
                   dump_folder=None, threads=1):
    """Run the full backward recursion and get the root row and captured regions."""
    maturity = contract.maturity
    tree = build_rate_tree(hw_params, maturity, config.steps_per_year)
    grid = build_log_grid(contract, model, hw_params, config)
    jumps = discretize_jumps(model, config.dy, config.eps, config.bound)
    _logger.debug('Hybrid grid with %d nodes, jump stencil of %d points, '
                  'implicit band %d.', grid.size, len(jumps.weights),
                  jumps.implicit_band(config.dt))

    last = tree.n_steps
    payoff = contract.death_benefit(maturity, grid.fund_values)
    surface = ValueSurface(last, np.tile(payoff, (last + 1, 1)), grid)
    regions = {}
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for m in range(maturity - 1, -1, -1):
            surface = rollback_interval(
                surface, tree, grid, contract, model, m, jumps, executor)
            if m in anniversaries:
                regions[m] = ExerciseRegion(
                    m, grid.fund_values, tree.short_rates(surface.level),
                    surrender_decisions(surface, contract, m),
                    tree.probabilities(surface.level) > 0)
            surface = anniversary_update(surface, contract, mortality, m)
            if not np.all(np.isfinite(surface.values)):
                raise ValueError('Non-finite contract values at anniversary '
                                 '{}.'.format(m))
            if dump_folder is not None:
                surface.to_csv(os.path.join(dump_folder, 'surface_m{}.csv'.format(m)))
            _logger.debug('Hybrid pricer reached anniversary %d.', m)
    finally:
        if executor is not None:
            executor.shutdown()
    info = {'grid_nodes': grid.size, 'tree_steps': tree.n_steps,
            'jump_points': len(jumps.weights), 'jump_bound': jumps.bound}
    return surface, regions, info


def price(contract, model, hw_params, config, mortality, mode='surrender',
          dump_folder=None, threads=1):
    """Price an ELVA contract with the hybrid tree and finite difference method.

    Args:
        contract: An ElvaContract.
        model: A Levy model for the fund.
        hw_params: A HullWhiteParams object for the short rate.
        config: A HybridConfig with the numerical settings.
        mortality: A MortalityTable of the policyholder.
        mode: Text for whether the policyholder can surrender. Choose from
            surrender, no_surrender. (Default: surrender).
        dump_folder: An optional folder where the surface of each anniversary
            is written as CSV. (Default: None).
        threads: An integer for the number of worker threads stepping the
            rows of each tree level. (Default: 1).

    Returns:
        A PriceResult.
    """
    if mode not in MODES:
        raise ValueError('Pricing mode "{}" is not supported. Choose from: '
                         '{}.'.format(mode, ', '.join(MODES)))
    if mode == 'no_surrender':
        contract = contract.no_surrender()
    start = time.time()
    surface, _, info = _backward_pass(
        contract, model, hw_params, config, mortality,
        dump_folder=dump_folder, threads=threads)
    value = surface.grid.interpolate(surface.values[0], np.log(contract.initial_fund))
    runtime = time.time() - start
    _logger.info('Hybrid %s price %.10g in %.2f s.', mode, value, runtime)
    return PriceResult(value, 'hybrid', mode, runtime=runtime, metadata=info)


def exercise_regions(contract, model, hw_params, config, mortality, anniversaries,
                     threads=1):
    """Price a contract with surrender and capture its exercise regions.

    Args:
        contract: An ElvaContract.
        model: A Levy model for the fund.
        hw_params: A HullWhiteParams object for the short rate.
        config: A HybridConfig with the numerical settings.
        mortality: A MortalityTable of the policyholder.
        anniversaries: A list of integers between 1 and maturity - 1.
        threads: An integer for the number of worker threads. (Default: 1).

    Returns:
        A tuple with the PriceResult and a dictionary of ExerciseRegion keyed
        by anniversary.
    """
    for m in anniversaries:
        if not 1 <= m < contract.maturity:
            raise ValueError('Exercise regions are defined for anniversaries 1 to {}. '
                             'Got {}.'.format(contract.maturity - 1, m))
    start = time.time()
    surface, regions, info = _backward_pass(
        contract, model, hw_params, config, mortality, set(anniversaries),
        threads=threads)
    value = surface.grid.interpolate(surface.values[0], np.log(contract.initial_fund))
    result = PriceResult(value, 'hybrid', 'surrender', runtime=time.time() - start,
                         metadata=info)
    return result, regions


def exercise_region(contract, model, hw_params, config, mortality, m, threads=1):
    """Get the ExerciseRegion of a contract at anniversary m."""
    return exercise_regions(
        contract, model, hw_params, config, mortality, [m], threads)[1][m]


def surrender_premium(contract, model, hw_params, config, mortality, threads=1):
    """Get the surrender premium of a contract as a PriceResult.

    The metadata of the result holds the dictionaries of both prices under
    the surrender and no_surrender keys.
    """
    start = time.time()
    sur = price(contract, model, hw_params, config, mortality, 'surrender',
                threads=threads)
    no_sur = price(contract, model, hw_params, config, mortality, 'no_surrender',
                   threads=threads)
    meta = {'surrender': sur.to_dict(), 'no_surrender': no_sur.to_dict()}
    return PriceResult(sur.value - no_sur.value, 'hybrid', 'premium',
                       runtime=time.time() - start, metadata=meta)
