import pytest

from davlab import build, parse_descriptor


@pytest.fixture
def grp():
    """Build (and memoize) a group from its descriptor string."""
    def _build(text: str):
        return build(parse_descriptor(text))
    return _build
