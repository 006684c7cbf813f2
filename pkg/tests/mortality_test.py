# coding=utf-8
import os
import pytest
import numpy as np

from ladybug.futil import nukedir, preparedir

from elva_pricing.mortality import MortalityTable, load_mortality, \
    conditional_death_prob
from elva_pricing.lib.mortality import default_mortality, mortality_by_name, \
    DEFAULT_AGE


def test_mortality_init():
    """Test the initialization of MortalityTable objects and basic properties."""
    table = MortalityTable([0.1, 0.2, 0.3], 60)
    str(table)  # test the string representation

    assert len(table) == 3
    assert table.age == 60
    assert list(table.masses) == [0.1, 0.2, 0.3]
    assert table.cumulative == pytest.approx([0.1, 0.3, 0.6], rel=1e-12)
    assert table.death_probability(2) == 0.2
    assert table.death_probability(4) == 0
    assert table.survival(0) == 1
    assert table.survival(1) == pytest.approx(0.9, rel=1e-12)
    assert table.survival(10) == pytest.approx(0.4, rel=1e-12)
    assert table.conditional_death_probability(1) == pytest.approx(0.1, rel=1e-12)
    assert table.conditional_death_probability(2) == pytest.approx(0.2 / 0.9,
                                                                   rel=1e-12)
    assert table.conditional_death_probability(3) == pytest.approx(0.3 / 0.7,
                                                                   rel=1e-12)


def test_mortality_invalid():
    """Test that invalid probability masses are rejected."""
    with pytest.raises(ValueError):
        MortalityTable([0.5, 0.6])
    with pytest.raises(ValueError):
        MortalityTable([0.1, -0.1])
    with pytest.raises(ValueError):
        MortalityTable([[0.1, 0.2]])

    dead = MortalityTable([0.5, 0.5])
    with pytest.raises(ValueError):
        dead.conditional_death_probability(3)


def test_mortality_shift():
    """Test the shift of a table to an older age at inception."""
    table = MortalityTable([0.1, 0.2, 0.3], 60)
    older = table.for_age(61)
    assert older.age == 61
    assert older.masses == pytest.approx([0.2 / 0.9, 0.3 / 0.9], rel=1e-12)
    assert table.for_age(60) is table
    assert MortalityTable([0.1]).for_age(45).age is None
    with pytest.raises(ValueError):
        table.for_age(59)
    assert conditional_death_prob(table, 61, 1) == pytest.approx(0.2 / 0.9,
                                                                 rel=1e-12)


def test_gompertz_makeham():
    """Test the parametric mortality table."""
    table = MortalityTable.from_gompertz_makeham(30)
    assert len(table) == 90
    assert table.cumulative[-1] <= 1
    # the conditional death probability grows with age
    hazards = [table.conditional_death_probability(m) for m in range(1, 60)]
    assert all(b > a for a, b in zip(hazards[:-1], hazards[1:]))


def test_mortality_from_csv():
    """Test the loading of mortality tables from CSV files."""
    folder = './tests/assets/mortality'
    preparedir(folder)
    good = os.path.join(folder, 'table.csv')
    with open(good, 'w') as outf:
        outf.write('m,p\n1,0.01\n2,0.02\n\n3,0.03\n')
    gap = os.path.join(folder, 'gap.csv')
    with open(gap, 'w') as outf:
        outf.write('m,p\n1,0.01\n3,0.02\n')
    text = os.path.join(folder, 'text.csv')
    with open(text, 'w') as outf:
        outf.write('m,p\n1,abc\n')

    table = load_mortality(good, 40)
    assert table.age == 40
    assert table.masses == pytest.approx([0.01, 0.02, 0.03], rel=1e-12)
    assert mortality_by_name(good, 40).masses == pytest.approx(table.masses)
    with pytest.raises(ValueError):
        load_mortality(gap)
    with pytest.raises(ValueError):
        load_mortality(text)
    nukedir(folder, True)


def test_default_mortality():
    """Test the mortality table of the library."""
    assert mortality_by_name('default') is default_mortality
    assert default_mortality.age == DEFAULT_AGE
    assert len(default_mortality) == 90
    assert np.all(default_mortality.masses > 0)
    assert conditional_death_prob(default_mortality, 30, 1) == \
        pytest.approx(default_mortality.masses[0], rel=1e-12)
    with pytest.raises(AttributeError):
        default_mortality.foo = 1
    with pytest.raises(ValueError):
        mortality_by_name('not_a_table')


def test_mortality_dict_methods():
    """Test the to/from dict methods."""
    table = MortalityTable([0.01, 0.02], 30)
    table_dict = table.to_dict()
    new_table = MortalityTable.from_dict(table_dict)
    assert list(new_table.masses) == list(table.masses)
    assert new_table.age == 30
    assert table_dict == new_table.to_dict()
