from fractions import Fraction

import mpmath as mp
import pytest


def to_mpf(value: Fraction):
    return mp.mpf(value.numerator) / value.denominator


@pytest.fixture
def rng():
    import random

    return random.Random(20240911)
