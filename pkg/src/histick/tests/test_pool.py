import logging
import threading

import pytest

from histick.analysis.pool import LoggedPool

def _square(item, pool):

    pool.log(f'squared {item}')

    return item * item

def test_map_keeps_order(tmp_path):
    """
    Test that results come back in submission order and worker messages reach the log file.
    """

    log_path = str(tmp_path / 'pool.log')
    pool = LoggedPool(workers=3, log_path=log_path, log_name='histick.test_pool_order')

    assert pool.map(_square, range(8)) == [i * i for i in range(8)]

    for handler in logging.getLogger('histick.test_pool_order').handlers:
        handler.flush()

    text = (tmp_path / 'pool.log').read_text()

    assert all(f'squared {i}' in text for i in range(8))

def test_map_does_not_leak_threads():
    """
    Test that the log server thread stops after every map.
    """

    pool = LoggedPool(workers=2, log_name='histick.test_pool_threads')
    pool.map(_square, range(3))

    before = threading.active_count()

    for _ in range(5):
        pool.map(_square, range(3))

    assert threading.active_count() == before

def test_map_stops_server_on_error():
    """
    Test that a failing task propagates and still stops the log server.
    """

    def _fail(item, pool):
        raise ArithmeticError(item)

    pool = LoggedPool(workers=1, log_name='histick.test_pool_error')
    before = threading.active_count()

    with pytest.raises(ArithmeticError):
        pool.map(_fail, [1])

    assert threading.active_count() == before
    assert pool._queue is None

def test_workers_must_be_positive():
    """
    Test that a pool needs at least one worker.
    """

    with pytest.raises(ValueError):
        LoggedPool(workers=0)
