from fractions import Fraction

import pytest

from hopfloop.bialgebra import Bialgebra, loop_algebra
from hopfloop.fixtures import cyclic_table, moufang12_table, symmetric_table


@pytest.fixture(scope="session")
def c2():
    return cyclic_table(2)


@pytest.fixture(scope="session")
def s3():
    return symmetric_table(3)


@pytest.fixture(scope="session")
def m12():
    return moufang12_table()


@pytest.fixture(scope="session")
def kc2(c2):
    return loop_algebra(c2)


@pytest.fixture(scope="session")
def ks3(s3):
    return loop_algebra(s3)


@pytest.fixture(scope="session")
def km12(m12):
    return loop_algebra(m12)


@pytest.fixture(scope="session")
def monoid():
    """Two-dimensional span of {1, z} with z^2 = z and grouplike coproduct."""
    q0, q1 = Fraction(0), Fraction(1)
    return Bialgebra(
        2,
        mult=[[[q1, q0], [q0, q0]], [[q0, q1], [q1, q1]]],
        unit=[q1, q0],
        comult=[[[q1, q0], [q0, q0]], [[q0, q0], [q0, q1]]],
        counit=[q1, q1],
        antipode=None,
        name="idempotent-monoid",
    )
