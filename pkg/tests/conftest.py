import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pealab import builtin, builtin_names, enumerate_peas

FIXTURE_DIR = Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def corpus4():
    return list(enumerate_peas(4))


@pytest.fixture(scope="session")
def corpus5():
    return list(enumerate_peas(5))


@pytest.fixture(params=builtin_names())
def fixture_algebra(request):
    return builtin(request.param)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running enumeration checks")
