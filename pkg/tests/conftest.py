import pytest

from stlc_machines import _config
from stlc_machines.syntax import read_term


@pytest.fixture
def debug():
    old = _config.set_debug(True)
    yield
    _config.set_debug(old)


@pytest.fixture
def ident_app():
    """(\\x:o->o. x) (\\y:o. y), the worked example used throughout."""
    return read_term(r"(\x:o->o. x) (\y:o. y)")
