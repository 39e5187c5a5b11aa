import pytest

from pathlib import Path

import target
from target.parser import parse_spec_file

SPECS = Path(target.__file__).resolve().parent / "specs"


@pytest.fixture(scope="session")
def scores():
    return parse_spec_file(str(SPECS / "scores.tspec"))


@pytest.fixture(scope="session")
def sortedlist():
    return parse_spec_file(str(SPECS / "sortedlist.tspec"))


@pytest.fixture(scope="session")
def rbt():
    return parse_spec_file(str(SPECS / "rbt.tspec"))


@pytest.fixture(scope="session")
def mapmod():
    return parse_spec_file(str(SPECS / "map.tspec"))
