import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from detdim.graph import build_graph  # noqa: E402


@pytest.fixture
def p4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])
