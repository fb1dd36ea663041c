import pytest

from canonpoly.gf import Field
from canonpoly.orbits import OrbitTable


@pytest.fixture(scope="session")
def f2():
    return Field(2, 1, 1)


@pytest.fixture(scope="session")
def f4():
    return Field(2, 1, 2)


@pytest.fixture(scope="session")
def f8():
    return Field(2, 1, 3)


@pytest.fixture(scope="session")
def f9():
    return Field(3, 1, 2)


@pytest.fixture(scope="session")
def f16():
    return Field(2, 1, 4)


@pytest.fixture(scope="session")
def gf4_2():
    """GF(4^2): prime-power base field, ambient degree 4 over GF(2)."""
    return Field(2, 2, 2)


@pytest.fixture(scope="session")
def f4_orbits(f4):
    return OrbitTable(f4)


@pytest.fixture(scope="session")
def f8_orbits(f8):
    return OrbitTable(f8)


@pytest.fixture(scope="session")
def f9_orbits(f9):
    return OrbitTable(f9)


@pytest.fixture(scope="session")
def f16_orbits(f16):
    return OrbitTable(f16)


@pytest.fixture(scope="session")
def alpha(f4):
    """Root of the modulus of GF(4)."""
    return f4.from_coeffs([0, 1])
