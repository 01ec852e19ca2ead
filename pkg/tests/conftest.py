import numpy as np
import pytest

import hardyconst


@pytest.fixture(scope="session", autouse=True)
def _warm_kernel():
    # Compile (or load from cache) the counting kernel once, so the timed
    # acceptance tests measure arithmetic rather than jit compilation.
    hardyconst.warmup()


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
