import pytest

from hilbert_ext import Morphism, g4, h3


@pytest.fixture
def H3():
    return h3()


@pytest.fixture
def G4():
    return g4()


@pytest.fixture
def f(H3, G4):
    """x -> a, y -> b, 1 -> 1."""
    return Morphism(H3, G4, (G4.element("1"), G4.element("a"), G4.element("b")))
