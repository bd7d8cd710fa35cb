import pytest

from helpers import make_ideal_a, make_ideal_b, make_ideal_stable2


@pytest.fixture
def ideal_a():
    return make_ideal_a()


@pytest.fixture
def ideal_b():
    return make_ideal_b()


@pytest.fixture
def ideal_stable2():
    return make_ideal_stable2()
