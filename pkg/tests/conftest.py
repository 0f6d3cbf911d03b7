import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def tail_bounded_coeffs(rng, order, head, tail_budget=0.6):
    """Random coefficients c_0 = head, sum_{n>=1} |c_n| <= tail_budget.

    Keeping the tail summable keeps the series zero-free on the closed disk,
    which is what makes the exp/log recurrences well conditioned at high
    truncation orders.
    """
    mags = rng.random(order)
    mags *= tail_budget * rng.random() / mags.sum()
    phases = np.exp(2j * np.pi * rng.random(order))
    return np.concatenate([[head], mags * phases])
