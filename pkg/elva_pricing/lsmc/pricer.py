# coding=utf-8
"""Least squares Monte Carlo pricer with a regressed surrender rule."""
from __future__ import division

import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.stats import norm

from ..mortality import conditional_death_prob
from ..result import PriceResult
from .parameter import LsmcConfig
from .paths import simulate_paths
from .regression import fit_local_regression
from .sectors import partition_sectors

_logger = logging.getLogger(__name__)

CONFIDENCE_LEVEL = 0.99


def confidence_interval(samples, level=CONFIDENCE_LEVEL):
    """Get the normal confidence interval of the mean of samples.

    Args:
        samples: An array of at least two samples.
        level: A number for the confidence level. (Default: 0.99).

    Returns:
        A tuple of (lower bound, upper bound).
    """
    samples = np.asarray(samples, dtype=float)
    if len(samples) < 2:
        raise ValueError('A confidence interval needs at least two samples. '
                         'Got {}.'.format(len(samples)))
    mean = float(np.mean(samples))
    half = norm.ppf(0.5 + level / 2) * float(np.std(samples, ddof=1)) / \
        np.sqrt(len(samples))
    return mean - half, mean + half


def _estimate(samples, mode, runtime=None, metadata=None):
    """Get a PriceResult with the mean, the standard error and the interval."""
    std_error = float(np.std(samples, ddof=1)) / np.sqrt(len(samples))
    return PriceResult(float(np.mean(samples)), 'lsmc', mode, std_error,
                       confidence_interval(samples), runtime, metadata)


def _hazards(contract, table):
    """Get the conditional death probabilities indexed by anniversary.

    The entries at 0 and at maturity are 0 since both pay no death benefit
    apart from the maturity payoff.
    """
    hazards = np.zeros(contract.maturity + 1)
    for m in range(1, contract.maturity):
        hazards[m] = conditional_death_prob(table, contract.age, m)
    return hazards


def path_values(paths, contract, table, decide=None):
    """Get the value at inception of the cashflows of every path.

    The values are built backward from maturity: at each anniversary the
    death benefit is paid with the conditional death probability, and the
    survivors either surrender or keep the discounted value of later
    cashflows.

    Args:
        paths: A PathSet.
        contract: An ElvaContract.
        table: A MortalityTable of the policyholder.
        decide: An optional function of (m, regressand) returning a boolean
            array that is True where the path surrenders at m, or None for
            no surrender. If None, the contract is never surrendered.

    Returns:
        An array with one value per path.
    """
    maturity = contract.maturity
    assert paths.maturity == maturity, 'Paths cover {} anniversaries but the ' \
        'contract has {}.'.format(paths.maturity, maturity)
    hazards = _hazards(contract, table)
    funds = paths.funds
    future = contract.death_benefit(maturity, funds[maturity])
    for m in range(maturity - 1, -1, -1):
        nxt = m + 1
        if nxt < maturity:
            future = hazards[nxt] * contract.death_benefit(nxt, funds[nxt]) + \
                (1 - hazards[nxt]) * future
        values = paths.discount(m, nxt) * future
        if m == 0:
            return values
        exercise = decide(m, values) if decide is not None else None
        if exercise is None:
            future = values
        else:
            future = np.where(exercise, contract.surrender_benefit(m, funds[m]), values)


class StoppingRule(object):
    """Surrender rule made of the regressed continuation value of each anniversary.

    Args:
        contract: The ElvaContract of the rule.
        models: A dictionary of ContinuationModel keyed by anniversary.
            Anniversaries without a model are never surrendered.

    Properties:
        * contract
        * models
    """
    __slots__ = ('_contract', '_models')

    def __init__(self, contract, models):
        """Initialize StoppingRule."""
        self._contract, self._models = contract, dict(models)

    @property
    def contract(self):
        """Get the ElvaContract of the rule."""
        return self._contract

    @property
    def models(self):
        """Get the dictionary of ContinuationModel keyed by anniversary."""
        return self._models

    def exercise(self, m, funds, rates):
        """Get a boolean array that is True where surrendering at m is chosen.

        Surrender is chosen where the surrender benefit is positive and at
        least equal to the fitted continuation value.
        """
        if m not in self._models:
            return np.zeros(len(funds), dtype=bool)
        benefit = self._contract.surrender_benefit(m, funds)
        return (benefit > 0) & (benefit >= self._models[m].predict(funds, rates))

    def stopping_times(self, paths):
        """Get the first surrender anniversary of every path, maturity if none."""
        times = np.full(paths.n_paths, paths.maturity)
        for m in range(paths.maturity - 1, 0, -1):
            times[self.exercise(m, paths.funds[m], paths.rates[m])] = m
        return times

    def __repr__(self):
        return 'StoppingRule: [anniversaries: {}]'.format(sorted(self._models))


def price_no_surrender(paths, contract, table):
    """Price the contract without surrender on a PathSet.

    Args:
        paths: A PathSet.
        contract: An ElvaContract.
        table: A MortalityTable of the policyholder.

    Returns:
        A PriceResult with the standard error and the 99% interval.
    """
    return _estimate(path_values(paths, contract, table), 'no_surrender')


def _fit_rule(paths, contract, table, seed, config, executor=None):
    """Build the stopping rule backward and get it with the in-sample path values."""
    models = {}

    def _decide(m, values):
        funds, rates = paths.funds[m], paths.rates[m]
        benefit = contract.surrender_benefit(m, funds)
        if not np.any(benefit > 0):
            return None
        partition = partition_sectors(funds, contract, m, config.max_share)
        models[m] = fit_local_regression(
            funds, rates, values, partition, seed, m, config.degree_cap,
            executor=executor)
        return (benefit > 0) & (benefit >= models[m].predict(funds, rates))

    values = path_values(paths, contract, table, _decide)
    return StoppingRule(contract, models), values


def backward_induction(paths, contract, table, config=None, threads=1):
    """Fit the surrender rule on a PathSet and price the contract on the same paths.

    Args:
        paths: A PathSet.
        contract: An ElvaContract with at least two anniversaries.
        table: A MortalityTable of the policyholder.
        config: An optional LsmcConfig for the regression settings.
        threads: An integer for the number of threads fitting the sectors.
            (Default: 1).

    Returns:
        A tuple with the PriceResult and the StoppingRule.
    """
    assert contract.maturity >= 2, 'Backward induction needs a maturity of at ' \
        'least 2. Got {}.'.format(contract.maturity)
    config = config if config is not None else LsmcConfig()
    seed = paths.seed if paths.seed is not None else config.seed
    start = time.time()
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        rule, values = _fit_rule(paths, contract, table, seed, config, executor)
    finally:
        if executor is not None:
            executor.shutdown()
    result = _estimate(values, 'surrender', time.time() - start)
    return result, rule


def apply_rule(paths, contract, table, rule):
    """Price the contract on a PathSet under a frozen StoppingRule.

    Args:
        paths: A PathSet, often independent of the paths that fitted the rule.
        contract: An ElvaContract.
        table: A MortalityTable of the policyholder.
        rule: A StoppingRule.

    Returns:
        A PriceResult.
    """
    def _decide(m, values):
        return rule.exercise(m, paths.funds[m], paths.rates[m])

    return _estimate(path_values(paths, contract, table, _decide), 'surrender')


def surrender_premium(model, hw_params, contract, table, config, threads=1):
    """Get the surrender premium of a contract with the least squares Monte Carlo.

    The rule is fitted on paths drawn from the seed of the config. With
    out_of_sample, both prices come from pricing_paths fresh paths drawn from
    [seed, 1].
    The interval of the premium comes from the per-path differences.

    Args:
        model: A Levy model for the fund.
        hw_params: A HullWhiteParams object for the short rate.
        contract: An ElvaContract.
        table: A MortalityTable of the policyholder.
        config: A LsmcConfig.
        threads: An integer for the number of worker threads. (Default: 1).

    Returns:
        A PriceResult of the premium whose metadata holds the dictionaries of
        both prices under the surrender and no_surrender keys.
    """
    start = time.time()
    paths = simulate_paths(model, hw_params, contract, config.n_paths, config.seed,
                           threads=threads)
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        rule, sur_values = _fit_rule(paths, contract, table, config.seed, config,
                                     executor)
    finally:
        if executor is not None:
            executor.shutdown()
    if config.out_of_sample:
        paths = simulate_paths(model, hw_params, contract, config.pricing_paths,
                               [config.seed, 1], threads=threads)
        sur_values = path_values(
            paths, contract, table,
            lambda m, _: rule.exercise(m, paths.funds[m], paths.rates[m]))
    no_sur_values = path_values(paths, contract, table)
    runtime = time.time() - start

    sur = _estimate(sur_values, 'surrender')
    no_sur = _estimate(no_sur_values, 'no_surrender')
    meta = {'surrender': sur.to_dict(), 'no_surrender': no_sur.to_dict(),
            'seed': config.seed, 'out_of_sample': config.out_of_sample,
            'n_paths': paths.n_paths,
            'chunk_size': paths.metadata.get('chunk_size')}
    premium = _estimate(sur_values - no_sur_values, 'premium', runtime, meta)
    _logger.info('Lsmc premium %.10g in [%.10g, %.10g] in %.2f s.', premium.value,
                 premium.ci[0], premium.ci[1], runtime)
    return premium
