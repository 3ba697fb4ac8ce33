"""Pytest configuration and shared fixtures."""

import tempfile
from pathlib import Path

import pytest

from src.catdata import load_ising3, load_semisimple1, parse_dataset
from src.utils.logger import logger


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    """Redirect run logs into a per-test directory."""
    logs_dir = tmp_path / "logs"
    monkeypatch.setattr(logger, "logs_dir", str(logs_dir))
    monkeypatch.setattr(logger, "to_file", True)
    return logs_dir


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(scope="session")
def ising():
    """The bundled Ising-type dataset."""
    return load_ising3()


@pytest.fixture(scope="session")
def semisimple():
    """1+1-dimensional data with blocks of dimension 1 and 2."""
    return load_semisimple1([1, 2])


@pytest.fixture
def toy_dataset_text():
    """A one-block 1+1 dataset in the text format."""
    return """# one simple block of dimension 2
n 1
labels 0 j
labels 1 p
trace j 2
gdim  j 1
trace p 1
gdim  p 2
frow t j j j p p p 2
ftilde t 2
surface t sphere
"""


@pytest.fixture
def toy_dataset(toy_dataset_text):
    return parse_dataset(toy_dataset_text, source="toy")


@pytest.fixture
def sample_dataset_file(temp_dir, toy_dataset_text):
    filepath = temp_dir / "toy.cat"
    filepath.write_text(toy_dataset_text)
    return filepath


@pytest.fixture
def sample_triangulation_file(temp_dir):
    """Boundary of the tetrahedron: a 2-sphere."""
    filepath = temp_dir / "sphere.tri"
    filepath.write_text(
        "dim 2\n"
        "simplex 1 2 3 +\n"
        "simplex 0 2 3 -\n"
        "simplex 0 1 3 +\n"
        "simplex 0 1 2 -\n"
    )
    return filepath


@pytest.fixture
def sample_group_file(temp_dir):
    """Z3 with its irrep dimensions."""
    filepath = temp_dir / "z3.grp"
    filepath.write_text("order 3\n0 1 2\n1 2 0\n2 0 1\nidentity 0\nirreps 1 1 1\n")
    return filepath
