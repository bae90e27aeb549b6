import pytest

from fvrlab.ring import make_ring


@pytest.fixture(scope="session")
def z9():
    return make_ring("zpr", 3, r=2)


@pytest.fixture(scope="session")
def z27():
    return make_ring("zpr", 3, r=3)


@pytest.fixture(scope="session")
def z25():
    return make_ring("zpr", 5, r=2)


@pytest.fixture(scope="session")
def f3x2():
    return make_ring("fqxr", 3, s=1, r=2)


@pytest.fixture(scope="session")
def f9():
    return make_ring("fqxr", 3, s=2, r=1)


@pytest.fixture(scope="session")
def all_rings(z9, z27, z25, f3x2, f9):
    return [z9, z27, z25, f3x2, f9]
