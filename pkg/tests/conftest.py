import random
import time

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

_START = time.perf_counter()
RUNTIME_LIMIT = 120.0


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    elapsed = time.perf_counter() - _START
    verdict = "PASS" if elapsed < RUNTIME_LIMIT else "FAIL"
    terminalreporter.write_line(f"total suite runtime {elapsed:.1f}s (limit {RUNTIME_LIMIT:.0f}s): {verdict}")
