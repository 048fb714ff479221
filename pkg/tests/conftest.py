import pytest

from paretocheck import DomainIndex


@pytest.fixture(scope="session")
def d22():
    return DomainIndex(2, 2)


@pytest.fixture(scope="session")
def d23():
    return DomainIndex(2, 3)


@pytest.fixture(scope="session")
def d32():
    return DomainIndex(3, 2)


@pytest.fixture(scope="session")
def d33():
    return DomainIndex(3, 3)


@pytest.fixture(scope="session")
def d33xyz():
    return DomainIndex(3, 3, "xyz")


@pytest.fixture(scope="session")
def d42():
    return DomainIndex(4, 2)


@pytest.fixture(scope="session")
def d43():
    return DomainIndex(4, 3)


@pytest.fixture(scope="session")
def d43xyzw():
    return DomainIndex(4, 3, "xyzw")


@pytest.fixture(scope="session")
def d52():
    return DomainIndex(5, 2)


@pytest.fixture(scope="session")
def d52paper():
    return DomainIndex(5, 2, "xyzwt")


@pytest.fixture(scope="session")
def d53paper():
    return DomainIndex(5, 3, "xyzwt")
