import pytest

from toric_hodge.fan import hirzebruch, projective_product, projective_space


@pytest.fixture(scope="session")
def P2():
    return projective_space(2)


@pytest.fixture(scope="session")
def P3():
    return projective_space(3)


@pytest.fixture(scope="session")
def P1P1():
    return projective_product(1, 1)


@pytest.fixture(scope="session")
def P2P1():
    return projective_product(2, 1)


@pytest.fixture(scope="session", params=range(4), ids=lambda r: f"F{r}")
def Fr(request):
    return hirzebruch(request.param)
