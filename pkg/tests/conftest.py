import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from circular_nim.core import CN74
from circular_nim.oracle import solve_all


@pytest.fixture(scope="session")
def cn74_table_h4():
    """CN(7,4) solved for all heights <= 4; shared by the heavy tests."""
    return solve_all(CN74, 4)


@pytest.fixture(scope="session")
def cn74_table_h2():
    return solve_all(CN74, 2)
