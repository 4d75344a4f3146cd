import pytest

from obci import RawStructure


@pytest.fixture
def point():
    """The one-element structure."""
    return RawStructure("point", ("e",), ((0,),), 0, ((True,),))
