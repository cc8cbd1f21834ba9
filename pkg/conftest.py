"""
Shared fixtures: enumerations are cached for the whole session
"""

from functools import lru_cache

import pytest

from constructions import dodecahedron, goldberg, gsw_free_family, nanotube_50
from spiral import enumerate_isomers


@lru_cache(maxsize=None)
def _isomers(n: int):
    return tuple(enumerate_isomers(n, workers=1))


@pytest.fixture(scope='session')
def isomers():
    """isomers(n) -> tuple of C_n in lexicographic order"""
    return _isomers


@pytest.fixture(scope='session')
def icosahedron():
    return dodecahedron()


@pytest.fixture(scope='session')
def c60():
    return goldberg(1, 1)


@pytest.fixture(scope='session')
def tube30():
    return nanotube_50(1)


@pytest.fixture(scope='session')
def gsw_free92():
    return gsw_free_family(2)
