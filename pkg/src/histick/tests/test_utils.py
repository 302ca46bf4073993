import json
import time
import datetime

from fractions import Fraction

import pytest

from histick.general import utils

def test_rational_str():
    """
    Test the num/den serialization of exact rationals.
    """

    assert utils.rational_str(Fraction(-1, 12)) == '-1/12'
    assert utils.rational_str(Fraction(4, 2)) == '2/1'
    assert utils.rational_str(3) == '3/1'

def test_parse_int_list():
    """
    Test parsing of comma-separated integers.
    """

    assert utils.parse_int_list('2, 5') == [2, 5]
    assert utils.parse_int_list('') == []
    assert utils.parse_int_list(None) == []
    assert utils.format_int_list(utils.parse_int_list('3,7,11')) == '3,7,11'

    with pytest.raises(ValueError):
        utils.parse_int_list('2,five')

def test_dump_json_is_deterministic(tmp_path):
    """
    Test that dumped JSON has sorted keys and loads back unchanged.
    """

    data = {'b': [1, 2], 'a': {'y': '1/3', 'x': None}}

    text = utils.dump_json(data)

    assert text == utils.dump_json(json.loads(text))
    assert text.index('"a"') < text.index('"b"')
    assert text.endswith('\n')

    path = tmp_path / 'data.json'
    utils.write_text_to_file(path, text)

    assert utils.load_json(path) == data

def test_get_current_datetime():
    """
    Test if the current datetime string has the correct format.
    """

    timestr = utils.get_current_datetime()

    assert isinstance(timestr, str)
    assert timestr[8] == '-'
    assert int(timestr[0:4]) >= 2024
    assert 1 <= int(timestr[4:6]) <= 12

def test_convert_time_string():
    """
    Test if conversion from the ``%Y%m%d-%H%M%S`` format to ``datetime.datetime`` object works.
    """

    example_date = '20240812-090801'

    datetime_object = utils.convert_time_string(example_date)

    assert isinstance(datetime_object, datetime.datetime)
    assert datetime_object.strftime('%Y%m%d-%H%M%S') == example_date
    assert utils.human_datetime(example_date) == 'Mon 12 August 2024, 09:08:01'

def test_get_runtime():
    """
    Test if runtime is reasonably calculated.
    """

    start_datetime = utils.get_current_datetime()
    time.sleep(0.5)
    end_datetime = utils.get_current_datetime()

    runtime = utils.get_runtime(utils.convert_time_string(start_datetime),
                                utils.convert_time_string(end_datetime))

    assert int(runtime[-2:]) < 2
    assert datetime.datetime.strptime(runtime, "%H:%M:%S")

def test_delete_directory_files(tmp_path):
    """
    Test that only the files inside a directory are deleted.
    """

    tmp_dir = tmp_path / 'test_delete_files'
    tmp_dir.mkdir()
    (tmp_dir / 'nested').mkdir()

    utils.write_text_to_file(tmp_dir / 'report.json', '{}')

    utils.delete_directory_files(tmp_dir)

    assert [p.name for p in tmp_dir.iterdir()] == ['nested']

def test_delete_directory(tmp_path):
    """
    Test if deleting a directory works.
    """

    tmp_dir = tmp_path / 'test_delete'
    tmp_dir.mkdir()

    assert utils.directory_exists(tmp_dir)

    utils.delete_directory(tmp_dir)

    assert not utils.directory_exists(tmp_dir)
    assert len(list(tmp_path.iterdir())) == 0
