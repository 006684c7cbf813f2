# coding=utf-8
import pytest
import numpy as np

from elva_pricing.contract import ElvaContract


def test_contract_init():
    """Test the initialization of ElvaContract objects and basic properties."""
    contract = ElvaContract(25, 0.01, 0.15)
    str(contract)  # test the string representation
    contract_dup = contract.duplicate()

    assert contract.maturity == contract_dup.maturity == 25
    assert contract.floor_rate == contract_dup.floor_rate == 0.01
    assert contract.cap_rate == contract_dup.cap_rate == 0.15
    assert contract.dividend_yield == 0.01
    assert contract.fees == 0.02
    assert contract.penalties == 0.02
    assert contract.age == 30
    assert contract.initial_fund == 1
    assert contract.has_surrender
    assert contract.fee(0) == contract.fee(24) == 0.02
    assert contract.penalty(1) == contract.penalty(24) == 0.02

    with pytest.raises(ValueError):
        contract.fee(25)
    with pytest.raises(ValueError):
        contract.penalty(0)
    with pytest.raises(ValueError):
        contract.penalty(25)


def test_contract_equivalency():
    """Test the equality of a contract to another ElvaContract."""
    contract_1 = ElvaContract(10, 0.01, 0.15)
    contract_2 = contract_1.duplicate()
    contract_3 = ElvaContract(10, 0.03, 0.15)

    assert contract_1 == contract_2
    assert contract_1 != contract_3
    assert len(set([contract_1, contract_2, contract_3])) == 2

    contract_2.cap_rate = 0.3
    assert contract_1 != contract_2


def test_contract_lockability():
    """Test the lockability of the ElvaContract."""
    contract = ElvaContract(10, 0.01, 0.15)
    contract.cap_rate = 0.05
    contract.lock()
    with pytest.raises(AttributeError):
        contract.cap_rate = 0.3
    contract.unlock()
    contract.cap_rate = 0.3


def test_contract_invalid():
    """Test that invalid contract terms are rejected."""
    with pytest.raises(AssertionError):
        ElvaContract(10, 0.05, 0.01)  # cap below the floor
    with pytest.raises(AssertionError):
        ElvaContract(10, 0.01, 0.15, fees=1.0)
    with pytest.raises(AssertionError):
        ElvaContract(10, 0.01, 0.15, penalties=1.5)
    with pytest.raises(AssertionError):
        ElvaContract(3, 0.01, 0.15, fees=[0.01, 0.02])
    with pytest.raises(AssertionError):
        ElvaContract(3, 0.01, 0.15, penalties=[0.05, 0.04, 0.03])

    contract = ElvaContract(10, 0.01, 0.15)
    with pytest.raises(AssertionError):
        contract.floor_rate = 0.2


def test_contract_schedules():
    """Test the fee and penalty schedules of a contract."""
    contract = ElvaContract(3, 0.01, 0.15, fees=[0.01, 0.02, 0.03],
                            penalties=[0.05, 0.04])
    assert contract.fees == (0.01, 0.02, 0.03)
    assert contract.fee(2) == 0.03
    assert contract.penalty(1) == 0.05
    assert contract.penalty(2) == 0.04
    assert contract.effective_dividend(1) == pytest.approx(
        0.01 - np.log(1 - 0.02), rel=1e-12)


def test_contract_benefits():
    """Test the death and surrender benefits of a contract."""
    contract = ElvaContract(10, 0.01, 0.15, penalties=0.1)
    floor, cap = np.exp(0.05), np.exp(0.75)
    assert contract.floor(5) == pytest.approx(floor, rel=1e-12)
    assert contract.cap(5) == pytest.approx(cap, rel=1e-12)

    funds = np.array([0.5, 1.5, 3.0])
    death = contract.death_benefit(5, funds)
    assert death == pytest.approx([floor, 1.5, cap], rel=1e-12)
    surrender = contract.surrender_benefit(5, funds)
    assert surrender == pytest.approx([0.45, 1.35, 0.9 * cap], rel=1e-12)
    assert contract.surrender_benefit(10, funds) == pytest.approx(
        contract.death_benefit(10, funds), rel=1e-12)

    with pytest.raises(ValueError):
        contract.death_benefit(0, funds)
    with pytest.raises(ValueError):
        contract.surrender_benefit(11, funds)


def test_no_surrender():
    """Test the contract without surrender option."""
    contract = ElvaContract(10, 0.01, 0.15)
    no_sur = contract.no_surrender()
    assert not no_sur.has_surrender
    assert contract.has_surrender
    assert np.all(no_sur.surrender_benefit(3, np.array([0.5, 2.0])) == 0)
    assert ElvaContract(1, 0.01, 0.15).has_surrender is False


def test_surrender_thresholds():
    """Test the fund thresholds that delimit the regression sectors."""
    contract = ElvaContract(25, 0.01, 0.15)
    expected = [0.138146, 0.276293, 0.552585, 1.105171, 2.793430, 4.481689,
                8.963378, 17.926756, 35.853512]
    assert contract.surrender_thresholds(10) == pytest.approx(expected, abs=1e-6)

    flat = ElvaContract(25, 0.0, 0.0)
    assert len(flat.surrender_thresholds(3)) == 7  # floor, midpoint and cap coincide


def test_contract_dict_methods():
    """Test the to/from dict methods."""
    contract = ElvaContract(3, 0.01, 0.15, 0.02, [0.01, 0.02, 0.03], [0.05, 0.04],
                            45, 100)
    contract_dict = contract.to_dict()
    new_contract = ElvaContract.from_dict(contract_dict)
    assert new_contract == contract
    assert contract_dict == new_contract.to_dict()

    minimal = ElvaContract.from_dict(
        {'type': 'ElvaContract', 'maturity': 10, 'floor_rate': 0.01,
         'cap_rate': 0.15})
    assert minimal == ElvaContract(10, 0.01, 0.15)
