import pytest

from qgeom.constants import codata_scale


@pytest.fixture(scope="session")
def scale():
    return codata_scale()
