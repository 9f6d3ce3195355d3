from functools import lru_cache

import pytest

from vncore import catalog, classify


@lru_cache(maxsize=None)
def entry(name):
    return catalog.make(name)


@lru_cache(maxsize=None)
def report(name):
    return classify(entry(name))


@pytest.fixture
def z2():
    return entry("z2")


@pytest.fixture
def sweedler():
    return entry("sweedler")


@pytest.fixture
def groupoid2():
    return entry("groupoid2")


@pytest.fixture
def leftzero2():
    return entry("leftzero2")
