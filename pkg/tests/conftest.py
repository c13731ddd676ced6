import os
import tempfile

import pytest


@pytest.fixture(scope="session", autouse=True)
def _isolated_character_cache():
    """Keep character-table cache files out of the working tree during tests."""
    old = os.environ.get("CONIFOLD_CACHE_DIR")
    tmp = tempfile.mkdtemp(prefix="conifold-cache-")
    os.environ["CONIFOLD_CACHE_DIR"] = tmp
    yield
    if old is None:
        os.environ.pop("CONIFOLD_CACHE_DIR", None)
    else:
        os.environ["CONIFOLD_CACHE_DIR"] = old
