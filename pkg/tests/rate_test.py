# coding=utf-8
import os
import pytest
import numpy as np

from ladybug.futil import nukedir, preparedir

from elva_pricing.rate.curve import FlatCurve, TabulatedCurve, dict_to_curve
from elva_pricing.rate.hullwhite import HullWhiteParams
from elva_pricing.rate.tree import RateTree, build_rate_tree
from elva_pricing.rate.simulate import sample_rate_paths


def test_flat_curve():
    """Test the prices and forward rates of a flat curve."""
    curve = FlatCurve(0.02)
    assert curve.is_flat
    assert curve.zcb(2) == pytest.approx(np.exp(-0.04), rel=1e-12)
    assert np.allclose(curve.fwd([0, 1, 5]), 0.02)
    assert curve.log_zcb_difference(1, 3) == pytest.approx(0.04, rel=1e-12)
    assert dict_to_curve(curve.to_dict()) == curve


def test_tabulated_curve():
    """Test the interpolation of a tabulated discount curve."""
    curve = TabulatedCurve([0, 1, 2], [1, np.exp(-0.02), np.exp(-0.05)])
    assert not curve.is_flat
    assert curve.zcb(1) == pytest.approx(np.exp(-0.02), rel=1e-12)
    assert curve.zcb(0.5) == pytest.approx(np.exp(-0.01), rel=1e-12)
    assert curve.fwd(0.5) == pytest.approx(0.02, rel=1e-6)
    assert curve.fwd(1.5) == pytest.approx(0.03, rel=1e-6)
    # log-linear extrapolation beyond the last maturity
    assert curve.zcb(3) == pytest.approx(np.exp(-0.08), rel=1e-12)

    new_curve = dict_to_curve(curve.to_dict())
    assert new_curve == curve


def test_tabulated_curve_invalid():
    """Test that invalid discount curves are rejected."""
    with pytest.raises(ValueError):
        TabulatedCurve([0, 2, 1], [1, 0.98, 0.99])
    with pytest.raises(ValueError):
        TabulatedCurve([0, 1], [1, -0.5])
    with pytest.raises(ValueError):
        TabulatedCurve([0, 1], [0.99, 0.98])
    with pytest.raises(ValueError):
        TabulatedCurve([0, 1, 2], [1, 0.98])
    with pytest.raises(ValueError):
        dict_to_curve({'type': 'NelsonSiegel'})


def test_tabulated_curve_from_csv():
    """Test the loading of a discount curve from a CSV file."""
    folder = './tests/assets/curve'
    preparedir(folder)
    good = os.path.join(folder, 'curve.csv')
    with open(good, 'w') as outf:
        outf.write('T,P\n0,1\n1,0.98\n\n5,0.9\n')
    bad = os.path.join(folder, 'bad_curve.csv')
    with open(bad, 'w') as outf:
        outf.write('T,P\n0,1\n1,abc\n')

    curve = TabulatedCurve.from_csv(good)
    assert list(curve.maturities) == [0, 1, 5]
    assert curve.zcb(5) == pytest.approx(0.9, rel=1e-12)
    with pytest.raises(ValueError):
        TabulatedCurve.from_csv(bad)
    nukedir(folder, True)


def test_hull_white_init():
    """Test the initialization of HullWhiteParams and basic properties."""
    params = HullWhiteParams(0.2, 0.03, 0.02)
    str(params)  # test the string representation
    params_dup = params.duplicate()

    assert params.k == params_dup.k == 0.2
    assert params.sigma == params_dup.sigma == 0.03
    assert params.r0 == params_dup.r0 == 0.02
    assert params.is_flat
    assert isinstance(params.curve, FlatCurve)
    assert params == params_dup
    assert params.beta(0) == pytest.approx(0.02, rel=1e-12)
    assert params.theta(0) == pytest.approx(0.02, rel=1e-12)

    with pytest.raises(AssertionError):
        params.k = 0
    with pytest.raises(AssertionError):
        params.sigma = 0


def test_hull_white_lockability():
    """Test the lockability of HullWhiteParams."""
    params = HullWhiteParams()
    params.sigma = 0.01
    params.lock()
    with pytest.raises(AttributeError):
        params.sigma = 0.02
    params.unlock()
    params.sigma = 0.02


def test_hull_white_curve_fit():
    """Test that the shift and the factor variance reprice the initial curve."""
    flat = HullWhiteParams(0.2, 0.03, 0.02)
    curve = TabulatedCurve([0, 1, 5, 10], [1, 0.98, 0.88, 0.75])
    sloped = HullWhiteParams(0.1, 0.01, 0.02, curve)
    assert not sloped.is_flat
    with pytest.raises(ValueError):
        sloped.theta(1)

    for params in (flat, sloped):
        for t in (1, 5, 10):
            log_price = -params.integrated_beta(0, t) + \
                0.5 * params.integrated_variance(t)
            assert np.exp(log_price) == pytest.approx(params.curve.zcb(t), rel=1e-9)


def test_hull_white_factor_moments():
    """Test the transition moments of the Ornstein-Uhlenbeck factor."""
    params = HullWhiteParams(0.5, 0.02, 0.01)
    decay, int_factor, var_r, var_int, cov = params.factor_moments(2.0)
    assert decay == pytest.approx(np.exp(-1.0), rel=1e-12)
    assert int_factor == pytest.approx((1 - np.exp(-1.0)) / 0.5, rel=1e-12)
    assert var_r == pytest.approx((1 - np.exp(-2.0)) / 1.0, rel=1e-12)
    assert var_int > 0 and cov > 0
    assert cov * cov <= var_r * var_int
    assert params.factor_variance(2.0) == pytest.approx(var_r, rel=1e-12)


def test_hull_white_dict_methods():
    """Test the to/from dict methods of HullWhiteParams."""
    curve = TabulatedCurve([0, 1, 5], [1, 0.98, 0.9])
    for params in (HullWhiteParams(), HullWhiteParams(0.1, 0.01, 0.03, curve)):
        params_dict = params.to_dict()
        new_params = HullWhiteParams.from_dict(params_dict)
        assert new_params == params
        assert params_dict == new_params.to_dict()

    params = HullWhiteParams.from_dict({'type': 'HullWhiteParams'})
    assert params == HullWhiteParams()


def test_rate_tree():
    """Test the construction of the short rate lattice."""
    params = HullWhiteParams(0.2, 0.03, 0.02)
    tree = build_rate_tree(params, 5, 20)
    str(tree)  # test the string representation

    assert isinstance(tree, RateTree)
    assert tree.n_steps == 100
    assert tree.dt == pytest.approx(0.05, rel=1e-12)
    assert len(tree.short_rates(0)) == 1
    assert len(tree.short_rates(10)) == 11
    assert tree.short_rates(0)[0] == pytest.approx(0.02, rel=1e-12)
    for n in (0, 10, 50):
        j = np.arange(n + 1)
        assert np.all(tree.up_index(n) >= np.minimum(j + 1, n + 1))
        assert np.all(tree.down_index(n) <= j)
        assert np.all((tree.up_probability(n) >= 0) & (tree.up_probability(n) <= 1))


def test_rate_tree_moments():
    """Test that the lattice matches the moments of the factor."""
    params = HullWhiteParams(0.2, 0.03, 0.02)
    tree = build_rate_tree(params, 2, 20)
    probs = tree.probabilities(20)
    assert probs.sum() == pytest.approx(1.0, rel=1e-12)
    mean, var = tree.moments(20)
    assert mean == pytest.approx(0.0, abs=1e-9)
    assert var == pytest.approx(params.factor_variance(1.0), rel=0.05)


def test_rate_tree_moment_convergence():
    """Test that the lattice moments approach the factor moments as steps grow."""
    params = HullWhiteParams(0.2, 0.03, 0.02)
    target = params.factor_variance(2.0)
    errors = []
    for steps in (2, 10, 50):
        tree = build_rate_tree(params, 2, steps)
        mean, var = tree.moments(tree.n_steps)
        assert mean == pytest.approx(0.0, abs=1e-9)
        errors.append(abs(var - target) / target)
    assert errors[-1] < 0.01
    assert errors[-1] < errors[0]


def test_rate_tree_zero_coupon():
    """Test that the lattice reprices the initial discount curve."""
    params = HullWhiteParams(0.2, 0.03, 0.02)
    tree = build_rate_tree(params, 5, 20)
    for t in (1, 3, 5):
        assert tree.zero_coupon_price(t) == pytest.approx(np.exp(-0.02 * t), rel=5e-3)
    values = tree.discount_from(20, 100)
    assert len(values) == 21
    rates = np.concatenate([tree.short_rates(n) for n in range(20, 100)])
    assert np.all(values > 0)
    assert np.all(values <= np.exp(-rates.min() * 4) * (1 + 1e-12))
    assert np.all(values >= np.exp(-rates.max() * 4) * (1 - 1e-12))


def test_rate_tree_limit():
    """Test that trees larger than the configured limit are rejected."""
    with pytest.raises(ValueError):
        RateTree(HullWhiteParams(), 100, 1000)


def test_sample_rate_paths():
    """Test the exact simulation of the short rate and its integral."""
    params = HullWhiteParams(0.2, 0.03, 0.02)
    rates, integrals = sample_rate_paths(params, 5, 100000, np.random.default_rng(7))

    assert rates.shape == integrals.shape == (6, 100000)
    assert np.all(rates[0] == params.beta(0))
    assert np.all(integrals[0] == 0)
    for t in (1, 5):
        bond = np.mean(np.exp(-integrals[t]))
        assert bond == pytest.approx(np.exp(-0.02 * t), rel=5e-3)
        assert np.var(rates[t]) == pytest.approx(
            0.03 ** 2 * params.factor_variance(t), rel=0.03)

    again, _ = sample_rate_paths(params, 5, 100000, np.random.default_rng(7))
    assert np.array_equal(rates, again)
