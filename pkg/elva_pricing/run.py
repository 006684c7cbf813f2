# coding=utf-8
"""Run experiments, sweeps, premium tables and exercise regions."""
from __future__ import division

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor

from ladybug.futil import preparedir

from .config import folders
from .hybrid import pricer as hybrid_pricer
from .lsmc import pricer as lsmc_pricer
from .result import PriceResult, ResultRecord, records_to_dict, write_json, \
    write_csv

_logger = logging.getLogger(__name__)

TABLE_FLOORS = (0.01, 0.03)
TABLE_CAPS = (0.05, 0.15, 0.30)
SWEEP_HEADER = ('parameter', 'premium', 'method', 'runtime_s', 'error')
TABLE_HEADER = ('g', 'c', 'premium', 'ci_lo', 'ci_hi', 'method', 'runtime_s')


def output_folder(config, folder=None):
    """Get the folder of the result files of an experiment.

    Args:
        config: An ExperimentConfig.
        folder: An optional folder that takes precedence over the output of
            the config. If both are None, the configured output_folder is used.
    """
    folder = folder or config.output or folders.output_folder
    preparedir(folder, remove_content=False)
    return folder


def price_record(config, method, mortality=None, threads=1):
    """Get the ResultRecord of an experiment priced with one method.

    Args:
        config: An ExperimentConfig.
        method: Text for the pricer. Choose from hybrid, lsmc.
        mortality: An optional MortalityTable. If None, the table of the
            config is loaded. (Default: None).
        threads: An integer for the number of worker threads. (Default: 1).
    """
    table = mortality if mortality is not None else config.load_mortality()
    start = time.time()
    if method == 'hybrid':
        premium = hybrid_pricer.surrender_premium(
            config.contract, config.model, config.hull_white,
            config.numerics.hybrid_config, table, threads)
        ci, seed = None, None
    elif method == 'lsmc':
        premium = lsmc_pricer.surrender_premium(
            config.model, config.hull_white, config.contract, table,
            config.numerics.lsmc_config, threads)
        ci, seed = premium.ci, config.numerics.seed
    else:
        raise ValueError('Method "{}" is not supported for a single record.'.format(
            method))
    sur = PriceResult.from_dict(premium.metadata['surrender'])
    no_sur = PriceResult.from_dict(premium.metadata['no_surrender'])
    return ResultRecord(config.to_dict(), sur, no_sur, ci, time.time() - start, seed)


def _methods(config):
    return ('hybrid', 'lsmc') if config.method == 'both' else (config.method,)


def run_experiment(config, threads=1):
    """Price an experiment with its method or both methods.

    Args:
        config: An ExperimentConfig.
        threads: An integer for the number of worker threads. (Default: 1).

    Returns:
        A tuple with the list of ResultRecord and the agreement flag, which is
        True when the hybrid premium is in the Monte Carlo 99% interval and
        None unless both methods run.
    """
    table = config.load_mortality()
    records = [price_record(config, method, table, threads)
               for method in _methods(config)]
    agreement = None
    if len(records) == 2:
        agreement = records[1].contains(records[0].premium)
        _logger.info('Hybrid premium %s the Monte Carlo interval.',
                     'is inside' if agreement else 'is outside')
    return records, agreement


def write_experiment(records, agreement, folder):
    """Write the records of an experiment to result.json in a folder."""
    return write_json(records_to_dict(records, agreement),
                      os.path.join(folder, 'result.json'))


def run_sweep(config, threads=1):
    """Price an experiment at every value of its sweep.

    Failed points become rows with an error message and the sweep goes on.

    Args:
        config: An ExperimentConfig with a sweep.
        threads: An integer for the number of points priced in parallel.

    Returns:
        A list of rows of (value, premium, method, runtime_s, error) with one
        row per value and method.
    """
    assert config.sweep is not None, 'The experiment has no sweep.'
    table = config.load_mortality()
    param = config.sweep.parameter
    points = [(v, m) for v in config.sweep.values for m in _methods(config)]

    def _point(point):
        value, method = point
        start = time.time()
        try:
            point_config = config.with_parameter(param, value)
            record = price_record(point_config, method, table)
            return [value, record.premium, method, record.runtime, '']
        except Exception as e:
            _logger.exception('Sweep point {} = {} failed.'.format(param, value))
            return [value, None, method, time.time() - start, str(e)]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(_point, points))
    return [_point(p) for p in points]


def write_sweep(rows, file_path):
    """Write the rows of a sweep to a CSV file."""
    return write_csv(SWEEP_HEADER, rows, file_path)


def run_table(config, threads=1):
    """Price the premium table over the floor and cap rates of the published tables.

    Args:
        config: An ExperimentConfig.
        threads: An integer for the number of worker threads. (Default: 1).

    Returns:
        A list of rows of (g, c, premium, ci_lo, ci_hi, method, runtime_s).
    """
    table = config.load_mortality()
    rows = []
    for g in TABLE_FLOORS:
        for c in TABLE_CAPS:
            if g > config.contract.cap_rate:  # the cap must never fall below the floor
                cell = config.with_parameter('c', c).with_parameter('g', g)
            else:
                cell = config.with_parameter('g', g).with_parameter('c', c)
            for method in _methods(config):
                rec = price_record(cell, method, table, threads)
                lo, hi = rec.premium_ci if rec.premium_ci is not None else (None, None)
                rows.append([g, c, rec.premium, lo, hi, method, rec.runtime])
                _logger.info('Premium table cell g=%s c=%s [%s]: %.10g', g, c,
                             method, rec.premium)
    return rows


def write_table(rows, file_path):
    """Write the rows of a premium table to a CSV file."""
    return write_csv(TABLE_HEADER, rows, file_path)


def emit_exercise_region(config, anniversaries, folder, threads=1):
    """Write the hybrid exercise region of each anniversary to a CSV file.

    Args:
        config: An ExperimentConfig.
        anniversaries: A list of integers between 1 and maturity - 1.
        folder: The folder of the region_m<m>.csv files.
        threads: An integer for the number of worker threads. (Default: 1).

    Returns:
        A list of the paths of the written files.
    """
    _, regions = hybrid_pricer.exercise_regions(
        config.contract, config.model, config.hull_white,
        config.numerics.hybrid_config, config.load_mortality(), anniversaries,
        threads)
    return [regions[m].to_csv(os.path.join(folder, 'region_m{}.csv'.format(m)))
            for m in sorted(regions)]
