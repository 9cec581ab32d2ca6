import numpy as np
import pytest

from bisymwave import (Case1Params, Case2aParams, case1_mask, case2a_mask,
                       case4a_masks, haar_mask)


@pytest.fixture(scope="session")
def haar():
    return haar_mask()


@pytest.fixture(scope="session")
def case1_sample():
    return case1_mask(Case1Params(np.pi / 2, 0.0))


@pytest.fixture(scope="session")
def case1_smooth():
    # family member whose cascade behaves well at moderate levels
    return case1_mask(Case1Params(3.3, 3.0))


@pytest.fixture(scope="session")
def p3_first():
    return case2a_mask(Case2aParams(part=3, sign=+1))


@pytest.fixture(scope="session")
def p3_second():
    return case2a_mask(Case2aParams(part=3, sign=-1))


@pytest.fixture(scope="session")
def all_case4a():
    return case4a_masks()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
