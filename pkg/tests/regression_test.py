# coding=utf-8
import pytest
import numpy as np

from elva_pricing.contract import ElvaContract
from elva_pricing.lsmc.sectors import SectorPartition, partition_sectors, _median_cut
from elva_pricing.lsmc.regression import monomial_exponents, basis_size, \
    design_matrix, SectorFit, fit_sector, ContinuationModel, fit_local_regression


def test_sector_partition():
    """Test the assignment of fund values to sectors."""
    partition = SectorPartition([1.0, 2.0], [0.5, 1.0, 1.5, 2.0, 3.0])
    str(partition)  # test the string representation

    assert partition.sector_count == len(partition) == 3
    assert list(partition.labels) == [0, 1, 1, 2, 2]
    assert list(partition.counts) == [1, 2, 2]
    assert list(partition.indices(1)) == [1, 2]
    assert list(partition.assign([0.99, 1.0, 5.0])) == [0, 1, 2]
    with pytest.raises(AssertionError):
        SectorPartition([2.0, 1.0], [1.0])


def test_median_cut():
    """Test the cut that halves a sample."""
    assert _median_cut(np.array([1.0, 1.0, 1.0])) is None
    assert _median_cut(np.array([1.0, 2.0, 3.0, 4.0])) == 3.0
    assert _median_cut(np.array([1.0, 1.0, 1.0, 2.0])) == 2.0


def test_partition_sectors():
    """Test that crowded sectors are split at their median."""
    contract = ElvaContract(25, 0.01, 0.15)
    funds = np.random.default_rng(1).lognormal(0.5, 0.3, 5000)
    partition = partition_sectors(funds, contract, 10)

    base = contract.surrender_thresholds(10)
    assert all(np.any(np.isclose(partition.breakpoints, b)) for b in base)
    assert len(partition.breakpoints) > len(base)
    assert partition.counts.max() <= 0.2 * len(funds)
    assert partition.counts.sum() == len(funds)


def test_partition_sectors_equal_values():
    """Test that a crowded sector of a single value stops the splits."""
    contract = ElvaContract(25, 0.01, 0.15)
    funds = np.full(100, 1.5)
    partition = partition_sectors(funds, contract, 10)
    assert list(partition.breakpoints) == pytest.approx(
        list(contract.surrender_thresholds(10)))
    assert partition.counts.max() == 100


def test_monomials():
    """Test the complete bivariate monomial basis."""
    assert monomial_exponents(2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert [basis_size(d) for d in range(4)] == [1, 3, 6, 10]
    assert len(monomial_exponents(8)) == basis_size(8) == 45
    matrix = design_matrix(np.array([2.0]), np.array([3.0]), 2)
    assert list(matrix[0]) == [1, 2, 3, 4, 6, 9]


def test_fit_sector_constant():
    """Test that a constant regressand keeps the degree at 0."""
    rng = np.random.default_rng(3)
    funds, rates = rng.uniform(1, 2, 200), rng.uniform(0, 0.05, 200)
    fit = fit_sector(funds, rates, np.full(200, 0.7), rng)
    str(fit)  # test the string representation
    assert fit.degree == 0
    assert fit.predict([1.5], [0.02]) == pytest.approx([0.7], rel=1e-12)


def test_fit_sector_linear():
    """Test that an exact linear regressand selects the degree 1."""
    rng = np.random.default_rng(4)
    funds, rates = rng.uniform(1, 2, 200), rng.uniform(0, 0.05, 200)
    y = 2 * funds + 30 * rates + 1
    fit = fit_sector(funds, rates, y, rng)
    assert fit.degree == 1
    assert 0 in fit.errors and 1 in fit.errors
    assert fit.predict([1.2, 1.8], [0.01, 0.04]) == pytest.approx(
        [2 * 1.2 + 0.3 + 1, 2 * 1.8 + 1.2 + 1], rel=1e-9)
    assert fit.scale == pytest.approx(
        (funds.min(), funds.max(), rates.min(), rates.max()))


def test_fit_sector_noise():
    """Test that a curved regressand with noise selects a curved polynomial."""
    rng = np.random.default_rng(5)
    funds, rates = rng.uniform(0.5, 3, 2000), rng.uniform(0, 0.05, 2000)
    clean = np.maximum(funds - 1.5, 0) ** 2
    fit = fit_sector(funds, rates, clean + 0.01 * rng.standard_normal(2000), rng)
    assert 2 <= fit.degree <= 8
    resid = fit.predict(funds, rates) - clean
    assert np.sqrt(np.mean(resid ** 2)) < 0.1


def test_fit_sector_few_points():
    """Test the degree of tiny samples that cannot be split."""
    rng = np.random.default_rng(6)
    fit = fit_sector([1.0, 2.0, 3.0], [0.01, 0.03, 0.02], [1.0, 2.0, 2.5], rng)
    assert fit.degree == 1
    assert fit.errors == {}
    single = fit_sector([1.0], [0.01], [4.0], rng)
    assert single.degree == 0
    assert single.predict([7.0], [0.2]) == pytest.approx([4.0])


def test_fit_sector_constant_rate():
    """Test that a sector with a single rate still fits the fund dependence."""
    rng = np.random.default_rng(7)
    funds = rng.uniform(1, 2, 100)
    fit = fit_sector(funds, np.full(100, 0.02), 3 * funds, rng)
    assert fit.degree == 1
    assert fit.predict([1.5], [0.02]) == pytest.approx([4.5], rel=1e-9)


def test_sector_fit_invalid():
    """Test that inconsistent coefficients are rejected."""
    with pytest.raises(AssertionError):
        SectorFit(1, [1.0, 2.0], (0, 1, 0, 1))
    with pytest.raises(AssertionError):
        SectorFit(0, [np.nan], (0, 1, 0, 1))
    assert list(SectorFit.rescale(np.array([1.0, 2.0]), 1.0, 1.0)) == [0, 0]


def test_fit_local_regression():
    """Test the sector by sector fit of the continuation value."""
    contract = ElvaContract(25, 0.01, 0.15)
    rng = np.random.default_rng(8)
    funds = rng.lognormal(0.3, 0.4, 3000)
    rates = rng.normal(0.02, 0.01, 3000)
    y = np.sqrt(funds) * np.exp(-rates)
    partition = partition_sectors(funds, contract, 5)
    model = fit_local_regression(funds, rates, y, partition, 9, 5)
    str(model)  # test the string representation

    assert isinstance(model, ContinuationModel)
    assert len(model.fits) == partition.sector_count
    assert len(model.degrees) == partition.sector_count
    assert model.predict(funds, rates) == pytest.approx(y, abs=0.01)

    again = fit_local_regression(funds, rates, y, partition, 9, 5)
    assert np.array_equal(again.predict(funds, rates), model.predict(funds, rates))


def test_nearest_sector_inheritance():
    """Test that sparse sectors inherit the fit of the nearest fitted sector."""
    rng = np.random.default_rng(10)
    funds = np.concatenate((rng.uniform(1, 2, 50), [5.0, 5.5], rng.uniform(8, 9, 50)))
    rates = rng.uniform(0, 0.05, len(funds))
    partition = SectorPartition([2.5, 4.0, 6.0, 7.0], funds)
    assert list(partition.counts) == [50, 0, 2, 0, 50]

    model = fit_local_regression(funds, rates, funds, partition, 0, 1)
    assert model.fits[1] is model.fits[0]
    assert model.fits[3] is model.fits[4]
    assert model.fits[2] in (model.fits[0], model.fits[4])


def test_fit_local_regression_tiny_sample():
    """Test that a sample below 10 points gets one global polynomial."""
    funds = np.linspace(1, 2, 8)
    rates = np.full(8, 0.015)
    partition = SectorPartition([1.5], funds)
    model = fit_local_regression(funds, rates, 2 * funds, partition, 0, 1)
    assert len(model.fits) == 1
    assert model.partition.sector_count == 1
    assert model.predict([1.25], [0.015]) == pytest.approx([2.5], rel=1e-6)
