import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lefschetz.ring import GradedIdeal  # noqa: E402

# the Gotzmann ideal I' = (x^2, xy, y^3, y^2z, xz^3, yz^3, z^4)
GOTZMANN = ["x1^2", "x1*x2", "x2^3", "x2^2*x3", "x1*x3^3", "x2*x3^3", "x3^4"]

# (x+y+z)^3 written out in the ideal-file grammar
CUBE_SUM = ("x1^3 + 3*x1^2*x2 + 3*x1^2*x3 + 3*x1*x2^2 + 6*x1*x2*x3 + 3*x1*x3^2"
            " + x2^3 + 3*x2^2*x3 + 3*x2*x3^2 + x3^3")
MIGLIORE_MIRO_ROIG = ["x1^3", "x2^3", "x3^3", CUBE_SUM]


@pytest.fixture
def gotzmann():
    return GradedIdeal.from_strings(3, GOTZMANN)


@pytest.fixture
def mmr():
    return GradedIdeal.from_strings(3, MIGLIORE_MIRO_ROIG)


_criteria = []


@pytest.fixture
def criterion():
    """Record a one-line pass/fail result for the acceptance summary."""

    def record(name, ok, detail=""):
        _criteria.append((name, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else ""))
