import functools
import pathlib

import pytest

from histick.arith import fields
from histick.ideals import bundle

FAST_PRIME_BOUND = 800

@pytest.fixture
def sample_data_path(scope='session'):
    """
    Get full path to ``./src/histick/tests/sample_data``.
    """

    path_to_sample_data = pathlib.Path('./src/histick/tests/sample_data')

    return path_to_sample_data

@pytest.fixture
def battery_path(sample_data_path, scope='session'):
    """
    Get full path to ``battery.cfg`` located in ``sample_data``.
    """

    return pathlib.Path(f'{sample_data_path}/battery.cfg')

@pytest.fixture
def bad_battery_path(sample_data_path, scope='session'):
    """
    Get full path to ``bad_battery.cfg`` located in ``sample_data``.
    """

    return pathlib.Path(f'{sample_data_path}/bad_battery.cfg')

@functools.lru_cache(maxsize=None)
def _stick_bundle(generators, primes):

    field = fields.build_field(list(generators))
    s = fields.PlaceSet(primes)

    return bundle.stick_ideal(field, s, FAST_PRIME_BOUND)

@pytest.fixture
def stick_bundle():
    """
    Factory of cached IdealBundles: ``stick_bundle((2, 5), (2, 5))``.
    """

    return _stick_bundle
