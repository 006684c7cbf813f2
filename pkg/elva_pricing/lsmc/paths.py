# coding=utf-8
"""Simulation of the fund, the short rate and its integral at the anniversaries."""
from __future__ import division

import json
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..rate.simulate import sample_rate_paths

_logger = logging.getLogger(__name__)

CHUNK_SIZE = 65536
PATH_FILE_VERSION = 1


class PathSet(object):
    """Simulated values of the fund, the short rate and its integral.

    Args:
        funds: An array of shape (M + 1, n_paths) with the fund values F_m.
        rates: An array of shape (M + 1, n_paths) with the short rates r_m.
        integrals: An array of shape (M + 1, n_paths) with the integrals I_m
            of the short rate from 0 to m.
        seed: An optional integer or list of integers for the seed of the
            simulation. (Default: None).
        metadata: An optional dictionary describing the simulation.

    Properties:
        * funds
        * rates
        * integrals
        * seed
        * metadata
        * maturity
        * n_paths
    """
    __slots__ = ('_funds', '_rates', '_integrals', '_seed', '_metadata')

    def __init__(self, funds, rates, integrals, seed=None, metadata=None):
        """Initialize PathSet."""
        funds = np.asarray(funds, dtype=float)
        rates = np.asarray(rates, dtype=float)
        integrals = np.asarray(integrals, dtype=float)
        assert funds.ndim == 2 and funds.shape == rates.shape == integrals.shape, \
            'Path arrays must share one two-dimensional shape. Got {}, {} and ' \
            '{}.'.format(funds.shape, rates.shape, integrals.shape)
        assert np.all(funds > 0), 'Simulated fund values must be positive.'
        self._funds, self._rates, self._integrals = funds, rates, integrals
        self._seed = seed
        self._metadata = metadata if metadata is not None else {}

    @property
    def funds(self):
        """Get the array of fund values with one row per anniversary."""
        return self._funds

    @property
    def rates(self):
        """Get the array of short rates with one row per anniversary."""
        return self._rates

    @property
    def integrals(self):
        """Get the array of the integrated short rates with one row per anniversary."""
        return self._integrals

    @property
    def seed(self):
        """Get the seed of the simulation or None."""
        return self._seed

    @property
    def metadata(self):
        """Get a dictionary describing the simulation."""
        return self._metadata

    @property
    def maturity(self):
        """Get the last anniversary M of the paths."""
        return self._funds.shape[0] - 1

    @property
    def n_paths(self):
        """Get the number of paths."""
        return self._funds.shape[1]

    def discount(self, start, end):
        """Get the path discount factors exp(-(I_end - I_start))."""
        return np.exp(self._integrals[start] - self._integrals[end])

    def to_file(self, file_path):
        """Write the paths to a versioned numpy .npz file.

        Args:
            file_path: The path of the file to write.
        """
        seed = [] if self._seed is None else np.atleast_1d(self._seed)
        np.savez(file_path, version=PATH_FILE_VERSION, funds=self._funds,
                 rates=self._rates, integrals=self._integrals, seed=seed,
                 metadata=json.dumps(self._metadata))
        return file_path

    @classmethod
    def from_file(cls, file_path):
        """Load a PathSet from a .npz file written by to_file."""
        with np.load(file_path) as data:
            version = int(data['version'])
            if version != PATH_FILE_VERSION:
                raise ValueError('Path file "{}" has version {}. Expected version '
                                 '{}.'.format(file_path, version, PATH_FILE_VERSION))
            seed = [int(s) for s in data['seed']]
            seed = None if not seed else seed[0] if len(seed) == 1 else seed
            return cls(data['funds'], data['rates'], data['integrals'], seed,
                       json.loads(str(data['metadata'])))

    def __repr__(self):
        return 'PathSet: [paths: {}] [anniversaries: {}]'.format(
            self.n_paths, self.maturity)


def simulate_paths(model, hw_params, contract, n_paths, seed, chunk_size=CHUNK_SIZE,
                   threads=1):
    """Simulate the fund, the short rate and its integral at every anniversary.

    The paths are drawn in chunks of chunk_size, each with its own stream
    spawned from the seed, so the result does not depend on threads.

    Args:
        model: A Levy model for the fund.
        hw_params: A HullWhiteParams object for the short rate.
        contract: An ElvaContract, which supplies the maturity, the initial fund
            and the effective dividend yields.
        n_paths: A positive integer for the number of paths.
        seed: An integer or a list of integers for the seed.
        chunk_size: An integer for the number of paths of each random stream.
            (Default: 65536).
        threads: An integer for the number of worker threads. (Default: 1).
    """
    assert n_paths >= 1, 'Number of paths must be positive. Got {}.'.format(n_paths)
    maturity = contract.maturity
    n_chunks = -(-int(n_paths) // int(chunk_size))
    streams = np.random.SeedSequence(seed).spawn(n_chunks)
    drifts = np.array([model.martingale_correction - contract.effective_dividend(m)
                       for m in range(maturity)])
    log_f0 = np.log(contract.initial_fund)

    def _chunk(index):
        size = min(chunk_size, n_paths - index * chunk_size)
        rng = np.random.default_rng(streams[index])
        rates, integrals = sample_rate_paths(hw_params, maturity, size, rng)
        increments = np.asarray(model.sample_increment(1.0, rng, (maturity, size)))
        log_f = np.empty((maturity + 1, size))
        log_f[0] = log_f0
        log_f[1:] = log_f0 + np.cumsum(
            np.diff(integrals, axis=0) + drifts[:, None] + increments, axis=0)
        return np.exp(log_f), rates, integrals

    if threads > 1 and n_chunks > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            chunks = list(executor.map(_chunk, range(n_chunks)))
    else:
        chunks = [_chunk(i) for i in range(n_chunks)]
    funds, rates, integrals = (np.hstack(arrays) for arrays in zip(*chunks))
    _logger.debug('Simulated %d paths over %d anniversaries.', n_paths, maturity)
    meta = {'chunk_size': int(chunk_size), 'model': model.to_dict(),
            'hull_white': hw_params.to_dict()}
    return PathSet(funds, rates, integrals, seed, meta)
