import pytest

from powerlab import catalog


@pytest.fixture
def s1():
    return catalog.singleton()


@pytest.fixture
def c2():
    return catalog.chain(2)


@pytest.fixture
def c3():
    return catalog.chain(3)


@pytest.fixture
def a2():
    return catalog.antichain(2)


@pytest.fixture
def vee():
    return catalog.vee()


@pytest.fixture
def wedge():
    return catalog.wedge()


@pytest.fixture
def bowtie():
    return catalog.bowtie()


def small_posets(max_n=4):
    """All enumerated posets up to max_n; shared sweep helper for tests."""
    from powerlab import enumerate_posets

    out = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_posets(n))
    return out
