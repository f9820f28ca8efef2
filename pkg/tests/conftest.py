import numpy as np
import pytest

import solvcover as sc


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run large stretch-target checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def _table(spec):
    return sc.build(spec)


@pytest.fixture(scope="session")
def a5():
    return _table(sc.alternating(5))


@pytest.fixture(scope="session")
def s5():
    return _table(sc.symmetric(5))


@pytest.fixture(scope="session")
def s4():
    return _table(sc.symmetric(4))


@pytest.fixture(scope="session")
def psl27():
    return _table(sc.psl2(7))


@pytest.fixture(scope="session")
def sl25():
    """SL(2,5) on the 24 nonzero vectors of GF(5)^2."""
    F = sc.field_ops(5)

    def mat_perm(a, b, c, d):
        img = np.empty(24, dtype=np.int64)
        for i in range(24):
            x, y = divmod(i + 1, 5)
            img[i] = (F.add(F.mul(a, x), F.mul(b, y))) * 5 + (F.add(F.mul(c, x), F.mul(d, y))) - 1
        return sc.Permutation(img)

    return sc.enumerate_group([mat_perm(1, 1, 0, 1), mat_perm(0, F.neg(1), 1, 0)])


@pytest.fixture(scope="session")
def a5_instance(a5):
    return sc.reduce_instance(sc.sol_incidence(a5))


@pytest.fixture(scope="session")
def s5_instance(s5):
    return sc.reduce_instance(sc.sol_incidence(s5))


@pytest.fixture(scope="session")
def a5_census(a5):
    return sc.maximal_solvable_subgroups(a5)


@pytest.fixture(scope="session")
def s5_census(s5):
    return sc.maximal_solvable_subgroups(s5)
