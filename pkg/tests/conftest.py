import pytest

from hyperaut.poly import HomogPoly, parse


def fermat(num_vars: int, degree: int) -> HomogPoly:
    mons = []
    for i in range(num_vars):
        mon = [0] * num_vars
        mon[i] = degree
        mons.append(tuple(mon))
    return HomogPoly.from_support(mons, num_vars)


@pytest.fixture
def klein_quartic():
    return parse("X0^3*X1 + X1^3*X2 + X2^3*X0", 3)


@pytest.fixture
def fermat_quintic_surface():
    return fermat(4, 5)
