import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240601,
                     help="seed for the sampled (non-hypothesis) property checks")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))
