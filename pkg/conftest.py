import os
import sys
from fractions import Fraction

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.exact import QParam  # noqa: E402


@pytest.fixture
def q():
    return QParam(Fraction(1, 2))


@pytest.fixture(params=[Fraction(1, 2), Fraction(2, 5), Fraction(9, 10)], ids=["1/2", "2/5", "9/10"])
def any_q(request):
    return QParam(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(7)
