import pytest

from zetalab.characters import enumerate_characters


@pytest.fixture(scope="session")
def chi4():
    """The non-principal (primitive, odd) character mod 4."""
    return next(c for c in enumerate_characters(4) if not c.is_principal)


@pytest.fixture(scope="session")
def chi3():
    return next(c for c in enumerate_characters(3) if not c.is_principal)


@pytest.fixture(scope="session")
def principal4():
    return next(c for c in enumerate_characters(4) if c.is_principal)
