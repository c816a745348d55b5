import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nonfree.registry import ACCEPTANCE_GROUPS, named_group


@pytest.fixture(scope="session")
def groups():
    """All acceptance groups, built once."""
    return {name: named_group(name) for name in ACCEPTANCE_GROUPS}


@pytest.fixture(scope="session")
def s3():
    return named_group("S3")


@pytest.fixture(scope="session")
def s4():
    return named_group("S4")


@pytest.fixture(scope="session")
def s5():
    return named_group("S5")
