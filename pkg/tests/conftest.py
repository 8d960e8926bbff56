import pytest

from sgprod.base import Settings
from sgprod.core import make_cycle, make_path


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def balanced_c4():
    return make_cycle(4, [1, 1, 1, 1])


@pytest.fixture
def unbalanced_c4():
    return make_cycle(4, [1, 1, 1, -1])


@pytest.fixture
def p4():
    return make_path(4, [1, -1, 1])
