"""
Shared fixtures: a click runner, a configured CLI and the worked example graphs.
"""
import pytest
from click.testing import CliRunner

from woideals import create_cli
from woideals.seeders import (hexagon_one_weight, path_heavy_interior, path_heavy_second,
                              pentagon_unit_sinks, pentagon_weighted_sinks, square_one_weight)


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='Run the full-size acceptance sweeps.')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: full-size acceptance sweeps')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def cli():
    """The command group with explicit, environment-independent limits."""
    return create_cli({
        'COVER_CAP': 24,
        'MAX_POWER': 6,
        'MAX_GENERATORS': 200_000,
        'JOBS': 1,
        'LOG_LEVEL': 'WARNING'
    })


@pytest.fixture
def runner():
    # stdout carries JSON only; logs go to the separate stderr stream.
    return CliRunner(mix_stderr=False)


@pytest.fixture
def square():
    return square_one_weight()


@pytest.fixture
def pentagon():
    return pentagon_weighted_sinks()


@pytest.fixture
def pentagon_reduced():
    return pentagon_unit_sinks()


@pytest.fixture
def heavy_second_path():
    return path_heavy_second()


@pytest.fixture
def heavy_interior_path():
    return path_heavy_interior()


@pytest.fixture
def hexagon():
    return hexagon_one_weight()
