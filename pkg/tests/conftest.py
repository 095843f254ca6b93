import pytest

from nakayama.algebra import Algebra, iter_algebras, make_rsz_nakayama
from nakayama.auslander import auslander_algebra


@pytest.fixture(scope="session")
def small_universe():
    """Exhaustive list of algebras with at most 4 vertices and entries <= 3."""
    return list(iter_algebras(4, 3))


@pytest.fixture(scope="session")
def gamma_lin3():
    return auslander_algebra(make_rsz_nakayama(3, "linear")).gamma


@pytest.fixture(scope="session")
def gamma_cyc3():
    return auslander_algebra(make_rsz_nakayama(3, "cyclic")).gamma


@pytest.fixture(scope="session")
def dual_numbers_gamma():
    return Algebra("cyclic", (3, 2))
