# coding=utf-8
"""Long-running checks of published surrender premiums and their properties.

These run only when the ELVA_FULL_TESTS environment variable is set since each
cell takes from seconds to minutes on a desktop core.

The published premiums were priced with a mortality table that is not bundled
with the package. Set ELVA_REFERENCE_MORTALITY to the path of that table, as a
CSV of (m, p) rows for a policyholder aged 30, to check them. The bundled
default table comes from a Gompertz-Makeham law and shifts the premiums: the
NIG cell g=1%/c=15% at preset B is 0.1917 with it against the published 0.1888.
The properties below hold for either table.
"""
import os
import pytest
import numpy as np

from elva_pricing.contract import ElvaContract
from elva_pricing.mortality import MortalityTable
from elva_pricing.rate.hullwhite import HullWhiteParams
from elva_pricing.lib.models import nig, vg, cgmy, mjd
from elva_pricing.lib.mortality import default_mortality, DEFAULT_AGE
from elva_pricing.lib.presets import preset_a, preset_b, preset_c, preset_d
from elva_pricing.hybrid import surrender_premium as hybrid_premium, \
    exercise_regions
from elva_pricing.lsmc import surrender_premium as lsmc_premium

REFERENCE_TABLE = os.getenv('ELVA_REFERENCE_MORTALITY')
full_tests = pytest.mark.skipif(
    not os.getenv('ELVA_FULL_TESTS'), reason='set ELVA_FULL_TESTS to run')
published_tests = pytest.mark.skipif(
    not (os.getenv('ELVA_FULL_TESTS') and REFERENCE_TABLE),
    reason='set ELVA_FULL_TESTS and ELVA_REFERENCE_MORTALITY to run')
HULL_WHITE = HullWhiteParams()
TOLERANCE = 0.0015
STATICS_TOLERANCE = 0.002


def _reference_mortality():
    return MortalityTable.from_csv(REFERENCE_TABLE, DEFAULT_AGE)


def _hybrid(model, preset, floor, cap, mortality, hw_params=HULL_WHITE, fees=0.02):
    contract = ElvaContract(25, floor, cap, fees=fees)
    return hybrid_premium(contract, model, hw_params, preset.hybrid_config,
                          mortality).value


@published_tests
@pytest.mark.parametrize('floor,cap,expected', [
    (0.01, 0.05, 0.1523), (0.01, 0.15, 0.1888), (0.01, 0.30, 0.1870),
    (0.03, 0.05, 0.0457), (0.03, 0.15, 0.1304), (0.03, 0.30, 0.1499)])
def test_nig_premium_table(floor, cap, expected):
    """Test the hybrid NIG premiums over the floor and cap rates."""
    premium = _hybrid(nig, preset_b, floor, cap, _reference_mortality())
    assert premium == pytest.approx(expected, abs=TOLERANCE)


@published_tests
@pytest.mark.parametrize('name,preset,floor,cap,expected', [
    ('vg', preset_b, 0.01, 0.05, 0.1327), ('cgmy', preset_b, 0.03, 0.30, 0.0369),
    ('mjd', preset_b, 0.01, 0.30, 0.1431), ('cgmy', preset_a, 0.03, 0.05, 0.0358),
    ('mjd', preset_b, 0.03, 0.30, 0.0811)])
def test_cross_model_premiums(name, preset, floor, cap, expected):
    """Test the hybrid premiums of the other Levy models."""
    model = {'vg': vg, 'cgmy': cgmy, 'mjd': mjd}[name]
    premium = _hybrid(model, preset, floor, cap, _reference_mortality())
    assert premium == pytest.approx(expected, abs=TOLERANCE)


@published_tests
def test_nig_premium_convergence():
    """Test that the NIG premium does not increase from the coarse to fine presets."""
    table = _reference_mortality()
    values = [_hybrid(nig, p, 0.01, 0.05, table)
              for p in (preset_a, preset_b, preset_c, preset_d)]
    assert all(b <= a + 1e-4 for a, b in zip(values[:-1], values[1:]))
    assert values[-1] == pytest.approx(0.1520, abs=0.0005)


@published_tests
def test_lsmc_premiums():
    """Test the Monte Carlo premiums against the published intervals."""
    table = _reference_mortality()
    contract = ElvaContract(25, 0.01, 0.15)
    premium = lsmc_premium(nig, HULL_WHITE, contract, table, preset_d.lsmc_config,
                           threads=4)
    assert premium.value == pytest.approx(0.1887, abs=0.0027 + TOLERANCE)

    contract = ElvaContract(25, 0.03, 0.15)
    premium = lsmc_premium(vg, HULL_WHITE, contract, table, preset_c.lsmc_config,
                           threads=4)
    assert premium.value == pytest.approx(0.0588, abs=0.0013 + TOLERANCE)


@full_tests
def test_bundled_table_premium():
    """Test the hybrid NIG premium priced with the bundled mortality table."""
    premium = _hybrid(nig, preset_b, 0.01, 0.15, default_mortality)
    assert premium == pytest.approx(0.1917, abs=TOLERANCE)


@full_tests
@pytest.mark.parametrize('name', ['nig', 'vg', 'cgmy', 'mjd'])
def test_method_agreement(name):
    """Test that the hybrid premium lies in the Monte Carlo 99% interval."""
    model = {'nig': nig, 'vg': vg, 'cgmy': cgmy, 'mjd': mjd}[name]
    contract = ElvaContract(25, 0.01, 0.15)
    hybrid = hybrid_premium(contract, model, HULL_WHITE, preset_b.hybrid_config,
                            default_mortality)
    lsmc = lsmc_premium(model, HULL_WHITE, contract, default_mortality,
                        preset_b.lsmc_config, threads=4)
    assert lsmc.ci[0] <= hybrid.value <= lsmc.ci[1]


@full_tests
def test_premium_cap_rate_hump():
    """Test that the premium is concave in the cap rate with an interior maximum."""
    caps = [0.05, 0.10, 0.15, 0.20, 0.25, 0.30]
    values = np.array([_hybrid(nig, preset_b, 0.01, c, default_mortality)
                       for c in caps])
    assert caps[int(np.argmax(values))] in (0.15, 0.20)
    assert np.all(np.diff(values, 2) <= STATICS_TOLERANCE)


@full_tests
def test_premium_comparative_statics():
    """Test the direction of the premium in the floor, fee and rate parameters."""
    floors = [_hybrid(nig, preset_b, g, 0.15, default_mortality)
              for g in (0.01, 0.02, 0.03)]
    fees = [_hybrid(nig, preset_b, 0.01, 0.15, default_mortality, fees=a)
            for a in (0.0, 0.01, 0.02)]
    sigmas = [_hybrid(nig, preset_b, 0.01, 0.15, default_mortality,
                      HullWhiteParams(0.2, s, 0.02)) for s in (0.01, 0.03, 0.05)]
    speeds = [_hybrid(nig, preset_b, 0.01, 0.15, default_mortality,
                      HullWhiteParams(k, 0.03, 0.02)) for k in (0.1, 0.2, 0.4)]
    assert np.all(np.diff(floors) <= STATICS_TOLERANCE)
    assert np.all(np.diff(fees) >= -STATICS_TOLERANCE)
    assert np.all(np.diff(sigmas) >= -STATICS_TOLERANCE)
    assert np.all(np.diff(speeds) <= STATICS_TOLERANCE)


@full_tests
def test_exercise_region_structure():
    """Test that late regions gain a band of fund values and grow with the rate."""
    contract = ElvaContract(25, 0.01, 0.15)
    _, regions = exercise_regions(contract, nig, HULL_WHITE, preset_b.hybrid_config,
                                  default_mortality, [5, 10, 20])
    for region in regions.values():
        assert region.rate_violations() == 0

    def _surrender_funds(region):
        return np.any(region.optimal[region.reachable], axis=0)

    band = _surrender_funds(regions[20]) & ~_surrender_funds(regions[5])
    assert np.any(band)
    assert not band[0] and not band[-1]
