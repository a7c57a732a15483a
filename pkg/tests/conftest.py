import pytest

from cfk.builders import (
    build_library,
    cable_exponents,
    staircase,
    torus_knot_exponents,
    unknot,
)
from cfk.complexes import mirror


@pytest.fixture(scope="session")
def library():
    return build_library()


@pytest.fixture(scope="session")
def trefoil():
    return staircase(torus_knot_exponents(2, 3), name="T(2,3)")


@pytest.fixture(scope="session")
def left_trefoil(trefoil):
    return mirror(trefoil)


@pytest.fixture(scope="session")
def t29():
    return staircase(torus_knot_exponents(2, 9), name="T(2,9)")


@pytest.fixture(scope="session")
def t45():
    return staircase(torus_knot_exponents(4, 5), name="T(4,5)")


@pytest.fixture(scope="session")
def cable_t23_25():
    return staircase(
        cable_exponents(torus_knot_exponents(2, 3), 2, 5), name="T(2,3;2,5)"
    )


@pytest.fixture(scope="session")
def the_unknot():
    return unknot()
