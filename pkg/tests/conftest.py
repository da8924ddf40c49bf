import pytest
from hypothesis import settings

from primefold import build_sieve

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def big_sieve():
    # covers p_10001 = 104743
    return build_sieve(120_000)


@pytest.fixture(scope="session")
def small_sieve():
    return build_sieve(5_000)
