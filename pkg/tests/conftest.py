import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from helpers import build_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return build_corpus(seed=977, size=60, max_t=4)
