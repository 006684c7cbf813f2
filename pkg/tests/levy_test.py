# coding=utf-8
import pytest
import numpy as np
from scipy import integrate

from elva_pricing.levy import NIG, VG, CGMY, MJD
from elva_pricing.levy.dictutil import dict_to_levy_model, LEVY_MODEL_TYPES
from elva_pricing.lib.models import nig, vg, cgmy, mjd, MODELS, model_by_name


def test_nig_init():
    """Test the initialization of NIG objects and basic properties."""
    model = NIG(6, -0.4, 2)
    model.display_name = 'Equity NIG'
    str(model)  # test the string representation of the model
    model_dup = model.duplicate()

    assert model.alpha == model_dup.alpha == 6
    assert model.beta == model_dup.beta == -0.4
    assert model.delta == model_dup.delta == 2
    assert model.display_name == model_dup.display_name == 'Equity NIG'
    assert model.gamma == pytest.approx(np.sqrt(36 - 0.16), rel=1e-12)
    assert model.diffusion_variance == 0
    assert model.mean_rate == pytest.approx(2 * -0.4 / model.gamma, rel=1e-12)
    assert model.variance_rate == pytest.approx(2 * 36 / model.gamma ** 3, rel=1e-12)

    with pytest.raises(AssertionError):
        model.delta = 0
    with pytest.raises(AssertionError):
        model.beta = 5.5  # |beta + 1| must stay below alpha


def test_levy_model_equivalency():
    """Test the equality of Levy models."""
    vg_1 = VG(0.85, 0, 0.2)
    vg_2 = vg_1.duplicate()
    vg_3 = VG(0.5, -0.1, 0.2)

    assert vg_1 == vg_2
    assert vg_1 != vg_3
    assert vg_1 != NIG(6, -0.4, 2)
    collection = [vg_1, vg_2, vg_3]
    assert len(set(collection)) == 2

    vg_2.sigma = 0.25
    assert vg_1 != vg_2


def test_levy_model_lockability():
    """Test the lockability of Levy models."""
    model = MJD(0.25, 0.6, 0.01, 0.13)
    model.jump_intensity = 0.5
    model.lock()
    with pytest.raises(AttributeError):
        model.jump_intensity = 0.7
    model.unlock()
    model.jump_intensity = 0.7

    with pytest.raises(AttributeError):
        nig.alpha = 7


def test_levy_model_invalid():
    """Test that invalid parameters of the Levy models are rejected."""
    with pytest.raises(AssertionError):
        NIG(1, 0.2, 1)  # |beta + 1| >= alpha
    with pytest.raises(AssertionError):
        VG(1, 0.5, 1)  # no finite exponential moment
    with pytest.raises(AssertionError):
        CGMY(0.02, 5, 0.9, 1.2)  # M must exceed 1
    with pytest.raises(AssertionError):
        CGMY(0.02, 5, 15, 1)  # integer Y
    with pytest.raises(AssertionError):
        MJD(0.25, 0.6, 0.01, 0)


def test_char_exponent_at_zero():
    """Test that every exponent vanishes at the frequency 0."""
    for model in (nig, vg, cgmy, mjd):
        assert abs(model.char_exponent(0)) < 1e-12
        assert abs(model.corrected_char_exponent(0)) < 1e-12


def test_martingale_correction():
    """Test that the corrected exponent is 0 at -i for every model."""
    for model in (nig, vg, cgmy, mjd):
        assert abs(model.corrected_char_exponent(-1j)) < 1e-12
        psi = model.char_exponent(-1j)
        assert abs(psi.imag) < 1e-12
        assert model.martingale_correction == pytest.approx(psi.real, abs=1e-15)


def test_vg_martingale_correction_value():
    """Test the martingale drift of the variance gamma parameters of the tables."""
    model = VG(0.85, 0, 0.2)
    assert model.martingale_correction == pytest.approx(-0.020171, abs=1e-6)
    expected = np.log(1 - 0.5 * 0.85 * 0.04) / 0.85
    assert model.martingale_correction == pytest.approx(expected, rel=1e-12)


def test_nig_martingale_correction_value():
    """Test the martingale drift of the NIG closed form."""
    model = NIG(6, -0.4, 2)
    expected = 2 * (np.sqrt(36 - 0.36) - np.sqrt(36 - 0.16))
    assert model.martingale_correction == pytest.approx(expected, rel=1e-12)


def test_char_exponent_outside_strip():
    """Test that frequencies outside the analyticity strip are rejected."""
    with pytest.raises(ValueError):
        nig.char_exponent(0.5j)
    with pytest.raises(ValueError):
        vg.char_exponent(-1.5j)
    values = cgmy.char_exponent(np.array([0, 1, -0.5j], dtype=complex))
    assert values.shape == (3,)


def test_levy_density():
    """Test the Levy densities of the models."""
    with pytest.raises(ValueError):
        nig.levy_density(0)
    ys = np.array([-0.5, -0.1, 0.1, 0.5])
    for model in (nig, vg, cgmy, mjd):
        dens = model.levy_density(ys)
        assert np.all(dens > 0)
    # CGMY decays faster on the side of the larger exponent
    assert cgmy.levy_density(0.5) < cgmy.levy_density(-0.5)
    assert mjd.levy_density(0.01) == pytest.approx(
        0.6 / (0.13 * np.sqrt(2 * np.pi)), rel=1e-12)


def test_sample_moments():
    """Test that the drift-corrected increments keep the fund a martingale."""
    rng = np.random.default_rng(42)
    for model in (nig, vg, cgmy, mjd):
        draws = model.sample_increment(1.0, rng, 200000)
        assert draws.shape == (200000,)
        assert np.mean(draws) == pytest.approx(model.mean_rate, abs=0.01)
        assert np.var(draws) == pytest.approx(model.variance_rate, rel=0.05)
        growth = np.mean(np.exp(draws + model.martingale_correction))
        assert growth == pytest.approx(1.0, abs=0.01)
    assert isinstance(vg.sample_increment(0.5, rng), float)
    with pytest.raises(AssertionError):
        vg.sample_increment(0, rng)


def test_small_jump_variance():
    """Test the variance of the jumps below a cutoff."""
    for model in (nig, vg, mjd):
        small = model.small_jump_variance(0.01)
        assert 0 < small < model.variance_rate
    assert mjd.small_jump_variance(0.02) > mjd.small_jump_variance(0.01)


def test_truncation_bound():
    """Test the truncation bound of the jump measure."""
    bound = vg.truncation_bound(dy=0.01)
    assert bound / 0.01 == pytest.approx(round(bound / 0.01), abs=1e-9)
    assert vg.tail_intensity(bound) < 1e-8
    assert mjd.tail_intensity(mjd.truncation_bound()) < 1e-8


def test_levy_model_dict_methods():
    """Test the to/from dict methods of all Levy models."""
    for model in (nig, vg, cgmy, mjd):
        model_dict = model.to_dict()
        assert model_dict['type'] in LEVY_MODEL_TYPES
        new_model = dict_to_levy_model(model_dict)
        assert new_model == model
        assert new_model.display_name == model.display_name
        assert model_dict == new_model.to_dict()

    with pytest.raises(ValueError):
        dict_to_levy_model({'type': 'Heston'})
    with pytest.raises(ValueError):
        dict_to_levy_model({'alpha': 6})
    assert dict_to_levy_model({'type': 'Heston'}, False) is None


def test_model_library():
    """Test the library of Levy models."""
    assert set(MODELS) >= {'nig', 'vg', 'cgmy', 'mjd'}
    assert model_by_name('vg') is vg
    assert isinstance(model_by_name('cgmy'), CGMY)
    with pytest.raises(ValueError):
        model_by_name('heston')


def test_char_exponent_symmetry():
    """Test that psi(-xi) is the conjugate of psi(xi) on the real line."""
    xis = np.array([0.3, 1.0, 2.5, 7.0])
    for model in (nig, vg, cgmy, mjd):
        assert model.char_exponent(-xis) == pytest.approx(
            np.conj(model.char_exponent(xis)), rel=1e-12, abs=1e-14)


def test_char_exponent_density_quadrature():
    """Test the real part of every exponent against the integral of its density."""
    pieces = ((-np.inf, -1.0), (-1.0, 0.0), (0.0, 1.0), (1.0, np.inf))
    for model in (nig, vg, cgmy, mjd):
        for xi in (1.0, 2.0):
            jumps = sum(integrate.quad(
                lambda y: (1 - np.cos(xi * y)) * model.levy_density(y), lo, hi,
                limit=400, epsabs=1e-13, epsrel=1e-11)[0] for lo, hi in pieces)
            expected = 0.5 * model.diffusion_variance * xi ** 2 + jumps
            assert model.char_exponent(xi).real == pytest.approx(expected, rel=1e-6)


def test_sample_characteristic_function():
    """Test the sampled increments against the characteristic function."""
    rng = np.random.default_rng(2024)
    count = 1000000
    for model in (nig, vg, cgmy, mjd):
        draws = model.sample_increment(1.0, rng, count)
        for xi in (1.0, 2.0):
            expected = np.exp(-model.char_exponent(xi))
            cos, sin = np.cos(xi * draws), np.sin(xi * draws)
            assert abs(np.mean(cos) - expected.real) < \
                4 * np.std(cos) / np.sqrt(count) + 1e-4
            assert abs(np.mean(sin) - expected.imag) < \
                4 * np.std(sin) / np.sqrt(count) + 1e-4
