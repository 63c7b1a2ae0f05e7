import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
sys.path.insert(0, str(Path(__file__).resolve().parent))

from neutra.dsl import parse_workspace  # noqa: E402


def load(name: str):
    return parse_workspace((FIXTURES / name).read_text())


@pytest.fixture
def ws():
    return load
