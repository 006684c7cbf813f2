# coding=utf-8
"""Local polynomial regression of the continuation value on the fund and the rate."""
from __future__ import division

import logging

import numpy as np

from .sectors import SectorPartition

_logger = logging.getLogger(__name__)

MIN_SECTOR_POINTS = 10
MIN_SPLIT_POINTS = 5
IMPROVEMENT_TOLERANCE = 1e-12


def monomial_exponents(degree):
    """Get the (a, b) exponents of the complete monomials F^a r^b of a total degree.
    """
    return [(total - b, b) for total in range(degree + 1) for b in range(total + 1)]


def basis_size(degree):
    """Get the number of complete bivariate monomials up to a total degree."""
    return (degree + 1) * (degree + 2) // 2


def design_matrix(x, z, degree):
    """Get the matrix of the complete bivariate monomials of x and z."""
    return np.column_stack([x ** a * z ** b for a, b in monomial_exponents(degree)])


def _least_squares(x, z, y, degree):
    """Get the least squares coefficients or None if the basis is rank deficient.

    Columns that vanish identically, as the rate monomials of a sector with a
    single rate, do not count as deficiency and get zero coefficients.
    """
    matrix = design_matrix(x, z, degree)
    coeffs, _, rank, _ = np.linalg.lstsq(matrix, y, rcond=None)
    active = int(np.count_nonzero(np.any(matrix != 0, axis=0)))
    if rank < active or not np.all(np.isfinite(coeffs)):
        return None
    return coeffs


class SectorFit(object):
    """Polynomial continuation value of one sector.

    The fund and the rate are rescaled to [-1, 1] over the points of the
    sector before the monomials are evaluated.

    Args:
        degree: An integer for the total degree of the polynomial.
        coefficients: An array of the coefficients of the monomials.
        scale: A tuple of (F_min, F_max, r_min, r_max) for the rescaling.
        errors: An optional dictionary of the out-of-sample mean squared
            error of each tried degree.

    Properties:
        * degree
        * coefficients
        * scale
        * errors
    """
    __slots__ = ('_degree', '_coefficients', '_scale', '_errors')

    def __init__(self, degree, coefficients, scale, errors=None):
        """Initialize SectorFit."""
        assert degree >= 0, 'Regression degree must be non-negative.'
        coefficients = np.asarray(coefficients, dtype=float)
        assert len(coefficients) == basis_size(degree), 'Expected {} coefficients ' \
            'for degree {}. Got {}.'.format(basis_size(degree), degree,
                                            len(coefficients))
        assert np.all(np.isfinite(coefficients)), 'Regression coefficients must ' \
            'be finite.'
        self._degree, self._coefficients = int(degree), coefficients
        self._scale = tuple(float(v) for v in scale)
        self._errors = errors if errors is not None else {}

    @property
    def degree(self):
        """Get the total degree of the polynomial."""
        return self._degree

    @property
    def coefficients(self):
        """Get the array of coefficients."""
        return self._coefficients

    @property
    def scale(self):
        """Get the (F_min, F_max, r_min, r_max) rescaling bounds."""
        return self._scale

    @property
    def errors(self):
        """Get a dictionary of the out-of-sample error of each tried degree."""
        return self._errors

    @staticmethod
    def rescale(values, lo, hi):
        """Map values from [lo, hi] to [-1, 1]. A zero-width range maps to 0."""
        if hi <= lo:
            return np.zeros_like(values, dtype=float)
        return 2 * (values - lo) / (hi - lo) - 1

    def scaled(self, funds, rates):
        """Get the rescaled fund values and rates."""
        f_lo, f_hi, r_lo, r_hi = self._scale
        return self.rescale(np.asarray(funds, dtype=float), f_lo, f_hi), \
            self.rescale(np.asarray(rates, dtype=float), r_lo, r_hi)

    def predict(self, funds, rates):
        """Evaluate the polynomial at arrays of fund values and rates."""
        x, z = self.scaled(funds, rates)
        return design_matrix(np.atleast_1d(x), np.atleast_1d(z), self._degree).dot(
            self._coefficients)

    def __repr__(self):
        return 'SectorFit: [degree: {}]'.format(self.degree)


def fit_sector(funds, rates, y, rng, degree_cap=8, train_share=0.8):
    """Fit the polynomial of one sector with the out-of-sample degree selection.

    Starting at degree 0, the degree grows while the error on the held-out
    share of the points improves. The selected degree is refit on all points.

    Args:
        funds: An array of fund values.
        rates: An array of short rates.
        y: An array of the regressands.
        rng: A numpy Generator for the random split.
        degree_cap: An integer for the highest degree tried. (Default: 8).
        train_share: A number for the share of points used for training.
            (Default: 0.8).
    """
    funds, rates, y = (np.asarray(v, dtype=float) for v in (funds, rates, y))
    n = len(y)
    assert n >= 1, 'Cannot fit a regression without points.'
    scale = (funds.min(), funds.max(), rates.min(), rates.max())
    x = SectorFit.rescale(funds, scale[0], scale[1])
    z = SectorFit.rescale(rates, scale[2], scale[3])

    errors = {}
    if n < MIN_SPLIT_POINTS:
        degree = 0
        while degree < degree_cap and basis_size(degree + 1) <= n:
            degree += 1
    else:
        order = rng.permutation(n)
        n_train = min(n - 1, max(1, int(round(train_share * n))))
        train, test = order[:n_train], order[n_train:]
        tolerance = IMPROVEMENT_TOLERANCE * float(np.mean(y * y))
        degree, best = 0, None
        for deg in range(degree_cap + 1):
            if basis_size(deg) > n_train:
                break
            coeffs = _least_squares(x[train], z[train], y[train], deg)
            if coeffs is None:
                break
            resid = design_matrix(x[test], z[test], deg).dot(coeffs) - y[test]
            errors[deg] = float(np.mean(resid * resid))
            if best is not None and errors[deg] >= best - tolerance:
                break
            degree, best = deg, errors[deg]

    coeffs = _least_squares(x, z, y, degree)
    while coeffs is None and degree > 0:
        degree -= 1
        coeffs = _least_squares(x, z, y, degree)
    if coeffs is None:
        coeffs = np.array([float(np.mean(y))])
    return SectorFit(degree, coeffs, scale, errors)


class ContinuationModel(object):
    """Continuation value at an anniversary made of one polynomial per sector.

    Args:
        partition: A SectorPartition of the fund values.
        fits: A list with one SectorFit per sector of the partition.

    Properties:
        * partition
        * fits
        * degrees
    """
    __slots__ = ('_partition', '_fits')

    def __init__(self, partition, fits):
        """Initialize ContinuationModel."""
        assert len(fits) == partition.sector_count, 'Expected {} sector fits. ' \
            'Got {}.'.format(partition.sector_count, len(fits))
        self._partition, self._fits = partition, tuple(fits)

    @property
    def partition(self):
        """Get the SectorPartition of the model."""
        return self._partition

    @property
    def fits(self):
        """Get a tuple of the SectorFit of every sector."""
        return self._fits

    @property
    def degrees(self):
        """Get a tuple of the polynomial degree of every sector."""
        return tuple(fit.degree for fit in self._fits)

    def predict(self, funds, rates):
        """Get the continuation values at arrays of fund values and rates."""
        funds = np.atleast_1d(np.asarray(funds, dtype=float))
        rates = np.atleast_1d(np.asarray(rates, dtype=float))
        labels = self._partition.assign(funds)
        values = np.empty(len(funds))
        for sector in np.unique(labels):
            mask = labels == sector
            values[mask] = self._fits[sector].predict(funds[mask], rates[mask])
        return values

    def __repr__(self):
        return 'ContinuationModel: [sectors: {}]'.format(len(self._fits))


def fit_local_regression(funds, rates, y, partition, seed, anniversary, degree_cap=8,
                         train_share=0.8, executor=None):
    """Fit the continuation value of an anniversary sector by sector.

    Each sector gets its own random split drawn from the seed, the
    anniversary and the sector index. Sectors with fewer than 10 points
    inherit the fit of the nearest fitted sector. When the whole sample has
    fewer than 10 points, a single polynomial is fitted to all of them.

    Args:
        funds: An array of fund values at the anniversary.
        rates: An array of short rates at the anniversary.
        y: An array of the regressands.
        partition: A SectorPartition of the fund values.
        seed: An integer for the master seed.
        anniversary: An integer for the anniversary.
        degree_cap: An integer for the highest degree tried. (Default: 8).
        train_share: A number for the share of points used for training.
            (Default: 0.8).
        executor: An optional concurrent.futures executor fitting the
            sectors in parallel. (Default: None).

    Returns:
        A ContinuationModel.
    """
    funds, rates, y = (np.asarray(v, dtype=float) for v in (funds, rates, y))

    def _rng(sector):
        return np.random.default_rng(
            np.random.SeedSequence(seed, spawn_key=(int(anniversary), int(sector))))

    if len(y) < MIN_SECTOR_POINTS:
        single = SectorPartition([], funds)
        fit = fit_sector(funds, rates, y, _rng(0), degree_cap, train_share)
        return ContinuationModel(single, [fit])

    counts = partition.counts
    populated = [s for s in range(partition.sector_count)
                 if counts[s] >= MIN_SECTOR_POINTS]
    if not populated:
        single = SectorPartition([], funds)
        fit = fit_sector(funds, rates, y, _rng(0), degree_cap, train_share)
        return ContinuationModel(single, [fit])

    def _fit(sector):
        idx = partition.indices(sector)
        return fit_sector(funds[idx], rates[idx], y[idx], _rng(sector),
                          degree_cap, train_share)

    if executor is None:
        fitted = [_fit(s) for s in populated]
    else:
        fitted = list(executor.map(_fit, populated))
    by_sector = dict(zip(populated, fitted))
    nearest = np.array(populated)
    fits = []
    for sector in range(partition.sector_count):
        if sector not in by_sector:
            sector = int(nearest[np.argmin(np.abs(nearest - sector))])
        fits.append(by_sector[sector])
    _logger.debug('Anniversary %d regression degrees: %s.', anniversary,
                  [fit.degree for fit in fitted])
    return ContinuationModel(partition, fits)
