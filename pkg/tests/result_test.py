# coding=utf-8
"""Tests the elva_pricing result module."""
import os
import json
import pytest

from ladybug.futil import nukedir

from elva_pricing.result import PriceResult, ResultRecord, records_to_dict, \
    write_json, write_csv, format_cell, engine_version


def _record(ci=(0.01, 0.03)):
    sur = PriceResult(1.02, 'lsmc', 'surrender', 0.001, (1.0, 1.04), 2.5)
    no_sur = PriceResult(1.0, 'lsmc', 'no_surrender', 0.001, (0.98, 1.02), 1.5)
    return ResultRecord({'model': 'nig'}, sur, no_sur, ci, 4.0, 0, '1.0.0')


def test_price_result():
    """Test the initialization of PriceResult objects and the dict methods."""
    result = PriceResult(1.25, 'hybrid', 'no_surrender', runtime=0.5,
                         metadata={'tree_steps': 10})
    str(result)  # test the string representation
    assert result.value == 1.25
    assert result.std_error is None
    assert result.ci is None

    result_dict = result.to_dict()
    assert 'ci' not in result_dict
    new_result = PriceResult.from_dict(result_dict)
    assert new_result.value == 1.25
    assert new_result.metadata == {'tree_steps': 10}
    assert new_result.to_dict() == result_dict

    with pytest.raises(AssertionError):
        PriceResult(1.0, 'binomial')
    with pytest.raises(AssertionError):
        PriceResult(1.0, 'lsmc', 'american')


def test_result_record():
    """Test the surrender premium record and its confidence interval."""
    record = _record()
    str(record)  # test the string representation
    assert record.method == 'lsmc'
    assert record.premium == pytest.approx(0.02, rel=1e-12)
    assert record.contains(0.02)
    assert not record.contains(0.05)
    assert not _record(None).contains(0.02)

    with pytest.raises(AssertionError):
        ResultRecord({}, PriceResult(1.0, 'hybrid'), PriceResult(1.0, 'lsmc'))


def test_result_record_dict_methods():
    """Test the to/from dict methods."""
    record = _record()
    record_dict = record.to_dict()
    assert record_dict['price_surrender'] == 1.02
    assert record_dict['premium_ci'] == [0.01, 0.03]
    assert record_dict['version'] == '1.0.0'
    new_record = ResultRecord.from_dict(record_dict)
    assert new_record.to_dict() == record_dict

    data = records_to_dict([record], agreement=True)
    assert data['agreement'] is True
    assert len(data['records']) == 1
    assert 'agreement' not in records_to_dict([record])
    assert isinstance(engine_version(), str)


def test_write_files():
    """Test the writing of JSON and CSV result files."""
    folder = './tests/assets/results'
    json_path = write_json(records_to_dict([_record()]),
                           os.path.join(folder, 'result.json'))
    with open(json_path) as inf:
        assert json.load(inf)['records'][0]['method'] == 'lsmc'

    csv_path = write_csv(['value', 'premium', 'error'], [[0.1, 1 / 3, None]],
                         os.path.join(folder, 'sweep.csv'))
    with open(csv_path) as inf:
        lines = inf.read().strip().split('\n')
    assert lines[0].strip() == 'value,premium,error'
    assert lines[1].strip() == '0.10000000000000001,0.33333333333333331,'
    nukedir(folder, True)


def test_format_cell():
    """Test the formatting of CSV cells."""
    assert format_cell(0.5) == '0.5'
    assert format_cell(3) == '3'
    assert format_cell(None) == ''
    assert format_cell('solver failed') == 'solver failed'
