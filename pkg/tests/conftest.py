import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

# first calls compile the kernels, which would trip the per-example deadline
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

ORACLES = Path(__file__).parent / "oracles" / "oracles.json"


def pytest_addoption(parser):
    parser.addoption("--run-long", action="store_true", default=False,
                     help="also run the full-scale benchmark grids")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="full-scale run; use --run-long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def oracles():
    return json.loads(ORACLES.read_text())


def fraction_matrix(rows):
    """Oracle [[num, den], ...] rows as a float array, via exact fractions."""
    return np.array([[float(Fraction(int(p), int(q))) for p, q in row] for row in rows])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(verdicts):
        terminalreporter.write_line(verdicts[key])
