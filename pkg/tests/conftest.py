import pathlib

import numpy as np
import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_image(rng, rows, cols):
    return rng.integers(0, 256, (rows, cols), dtype=np.uint8)
