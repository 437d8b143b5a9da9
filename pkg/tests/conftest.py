import pytest

from delp import CriterionConfig
from delp.oracle import fuzz_campaign, fuzz_programs

FUZZ_SEED = 0
FUZZ_COUNT = 1000


@pytest.fixture(scope="session")
def fuzz_reports():
    """The seed-0 differential campaign, shared by the oracle and acceptance tests."""
    return fuzz_campaign(FUZZ_SEED, FUZZ_COUNT, CriterionConfig())


@pytest.fixture(scope="session")
def fuzz_corpus():
    return fuzz_programs(FUZZ_SEED, 200)


@pytest.fixture(scope="session")
def negation_corpus():
    return fuzz_programs(7, 200, default_negation=True)
