import pytest

from roughtable import load_table1, table1_path


@pytest.fixture(scope="session")
def table1():
    return load_table1()


@pytest.fixture(scope="session")
def table1_file():
    return str(table1_path())
