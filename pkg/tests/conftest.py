import pytest

from mucofix import MutualPair, chain, diamond


@pytest.fixture
def c2():
    return chain(2)


@pytest.fixture
def c3():
    return chain(3)


@pytest.fixture
def d4():
    return diamond()


@pytest.fixture
def id2(c2):
    'Identity in both directions on the two-chain.'
    return MutualPair(c2, c2, (0, 1), (0, 1))


@pytest.fixture
def k1(c2):
    'Forward identity, constant-top back; least pair is (1, 1).'
    return MutualPair(c2, c2, (0, 1), (1, 1))


@pytest.fixture
def swap(d4):
    'Swaps the two atoms of the diamond in both directions.'
    return MutualPair(d4, d4, (0, 2, 1, 3), (0, 2, 1, 3))


@pytest.fixture
def cb2(c2):
    'Constant bottom both ways; every point of P sits in the fiber at 0.'
    return MutualPair(c2, c2, (0, 0), (0, 0))
