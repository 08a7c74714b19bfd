import pytest

from gridseq import oracle
from gridseq.schemes import Scheme


@pytest.fixture(scope="session")
def cantor_cells_10k():
    return oracle.traverse(Scheme("cantor"), 10_000)


@pytest.fixture(scope="session")
def angle_cells_10k():
    return oracle.traverse(Scheme("angle"), 10_000)
