import logging
import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from lib.lab import GeneratorSpec, gen  # noqa: E402
from lib.polycore import parse_poly  # noqa: E402


@pytest.fixture
def logger():
    return logging.getLogger("ruledLab.tests")


@pytest.fixture
def P():
    """Short alias for parse_poly."""
    return parse_poly


@pytest.fixture(scope="session")
def regulus3():
    return gen(GeneratorSpec("regulus-grid", g=3))


@pytest.fixture(scope="session")
def cone_config():
    return gen(GeneratorSpec("cone-pythagorean", n=6, seed=3))


@pytest.fixture(scope="session")
def cylinder_config():
    return gen(GeneratorSpec("parabolic-cylinder", n=5, seed=2))


@pytest.fixture(scope="session")
def product_config():
    return gen(GeneratorSpec("product-surface", n=6, seed=1))


@pytest.fixture(scope="session")
def variety2():
    return gen(GeneratorSpec("variety-4d", g=2))
