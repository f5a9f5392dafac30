import numpy as np
import pytest

from hemirings import (
    FiniteSemilattice,
    boolean_B,
    build_E_M,
    integers_mod,
    matrix_semiring,
    two_zero_mult,
)
from hemirings.verify import _endo, _hemirings, _semilattices


def chain_semilattice(n: int, name: str = "") -> FiniteSemilattice:
    join = np.maximum.outer(np.arange(n), np.arange(n))
    return FiniteSemilattice(join, zero=0, name=name or f"C{n}")


def diamond_semilattice() -> FiniteSemilattice:
    # 0 < a,b,c < top with incomparable atoms
    return FiniteSemilattice([
        [0, 1, 2, 3, 4],
        [1, 1, 4, 4, 4],
        [2, 4, 2, 4, 4],
        [3, 4, 4, 3, 4],
        [4, 4, 4, 4, 4]], name="M3")


def pentagon_semilattice() -> FiniteSemilattice:
    # 0 < a < b, 0 < c, tops join at 1 (N5)
    return FiniteSemilattice([
        [0, 1, 2, 3, 4],
        [1, 1, 2, 4, 4],
        [2, 2, 2, 4, 4],
        [3, 4, 4, 3, 4],
        [4, 4, 4, 4, 4]], name="N5")


def chain3_min_semiring():
    """The chain 0 < a < 1 with join as + and meet as *."""
    from hemirings import FiniteHemiring
    return FiniteHemiring(
        [[0, 1, 2], [1, 1, 2], [2, 2, 2]],
        [[0, 0, 0], [0, 1, 1], [0, 1, 2]],
        zero=0, one=2, name="chain3-min")


@pytest.fixture(scope="session")
def B():
    return boolean_B()


@pytest.fixture(scope="session")
def two():
    return two_zero_mult()


@pytest.fixture(scope="session")
def z2():
    return integers_mod(2)


@pytest.fixture(scope="session")
def z3():
    return integers_mod(3)


@pytest.fixture(scope="session")
def z4():
    return integers_mod(4)


@pytest.fixture(scope="session")
def c2():
    return chain_semilattice(2)


@pytest.fixture(scope="session")
def c3():
    return chain_semilattice(3)


@pytest.fixture(scope="session")
def m3():
    return diamond_semilattice()


@pytest.fixture(scope="session")
def n5():
    return pentagon_semilattice()


@pytest.fixture(scope="session")
def e_c3(c3):
    return build_E_M(c3)


@pytest.fixture(scope="session")
def e_m3(m3):
    return build_E_M(m3)


@pytest.fixture(scope="session")
def m2b(B):
    return matrix_semiring(B, 2)


@pytest.fixture(scope="session")
def semilattices_upto5():
    """All isomorphism classes of semilattices of order <= 5 (shared cache)."""
    return list(_semilattices(5))


@pytest.fixture(scope="session")
def idem_hemirings_upto4():
    return list(_hemirings(4, True))


@pytest.fixture(scope="session")
def plain_hemirings_upto3():
    return list(_hemirings(3, False))


@pytest.fixture(scope="session")
def endo_cache():
    """Shared E_M builder keyed by semilattice."""
    return _endo
