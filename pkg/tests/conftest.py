import pytest

from papartitions import count_pa_dp, enumerate_pa, series_G1, series_pa_o


@pytest.fixture(scope="session")
def pa_sets():
    """PA(n) for n = 1..41, enumerated once for the whole run."""
    return {n: enumerate_pa(n) for n in range(1, 42)}


@pytest.fixture(scope="session")
def dp_counts():
    """pa(1)..pa(1000) from the dynamic-programming counter."""
    return count_pa_dp(1000)


@pytest.fixture(scope="session")
def g1_small():
    return series_G1(60)


@pytest.fixture(scope="session")
def g1_2000():
    return series_G1(2000)


@pytest.fixture(scope="session")
def pa_o_1000():
    return series_pa_o(1000)
