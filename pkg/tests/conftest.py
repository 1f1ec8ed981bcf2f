import pathlib

import pytest

from gwsearch.verify import example_tree

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def tree25():
    """The 25-node example tree: root degree 4, max degree 6."""
    return example_tree()


@pytest.fixture
def tree25_path():
    return str(DATA_DIR / "example25.tree")
