import pytest

from lucascong.lucas import LucasParams


def params_grid(bound):
    """All parameter pairs with 0 < |A|, |B| <= bound."""
    return [LucasParams(a, b)
            for a in range(-bound, bound + 1) if a != 0
            for b in range(-bound, bound + 1) if b != 0]


@pytest.fixture(scope="session")
def small_grid():
    return params_grid(3)
