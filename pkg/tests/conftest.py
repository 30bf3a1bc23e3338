"""Shared fixtures for the test suite."""
import pytest

from twistlab.catalog import load_default_catalog


@pytest.fixture(scope="session")
def catalog():
    """The packaged curve dictionary and relation list."""
    return load_default_catalog()
