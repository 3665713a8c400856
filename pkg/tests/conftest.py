import sys
from pathlib import Path

import pytest

# Allow running the suite from a fresh checkout without installing; when the
# package is installed (pip install -e .) this resolves to the same files.
SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from farey_lt import elliptic  # noqa: E402
from farey_lt.arith import IntPolynomial  # noqa: E402


@pytest.fixture(scope="session")
def family_t_1():
    """The workhorse fixture family: A(t) = t, B(t) = 1."""
    return elliptic.family_validate(IntPolynomial((0, 1)), IntPolynomial((1,)))
