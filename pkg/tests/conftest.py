import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from topolab.enumeration import all_spaces_up_to
from topolab.fixtures import FIXTURES
from topolab.spaces import validate_topology


@pytest.fixture
def klmn():
    return FIXTURES["example-1.8"]


@pytest.fixture
def disjoint_pair_space():
    return FIXTURES["example-2.9"]


@pytest.fixture
def discrete3():
    return validate_topology(3, list(range(8)), name="discrete3")


@pytest.fixture
def indiscrete2():
    return validate_topology(2, [0, 3], name="indiscrete2")


@pytest.fixture
def sierpinski():
    return validate_topology(2, [0, 1, 3], name="sierpinski")


@pytest.fixture(scope="session")
def small_spaces():
    """Every labeled topology on up to 3 points."""
    return all_spaces_up_to(3)
