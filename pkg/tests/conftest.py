import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from brute import Brute  # noqa: E402

from nakayama import parse  # noqa: E402

FIXTURES = {
    "L5a": "linear:1,2,3,4,3",
    "L5b": "linear:1,2,3,3,3",
    "L4e": "linear:1,2,2,2",
    "C4": "cyclic:3,2,3,4",
    "G4": "cyclic:2,3,3,4",
    "C5": "cyclic:3,2,3,4,4",
    "SI": "cyclic:2,2",
}


@pytest.fixture(scope="session")
def fix():
    return {k: parse(v) for k, v in FIXTURES.items()}


def brute_of(A):
    return Brute(A.kupisch, A.cyclic)


def as_top_length(A, M):
    """Package modules are (socle, length); the brute oracle uses (top, length)."""
    return (A.wrap(M.socle + M.length - 1), M.length)
