# import Python's standard libraries
import os
import random
import tempfile

# point the app folder at a scratch directory before utils is imported
os.environ.setdefault("WEYLGAP_APP_DIR", tempfile.mkdtemp(prefix="weylgap-tests-"))
os.environ.pop("WEYLGAP_MAX_WORKERS", None)

# import third-party libraries
import pytest

# import local files
from utils.constants import CONSTANTS as C

@pytest.fixture
def rng() -> random.Random:
    """Seeded generator shared by the randomized property tests."""
    return random.Random(C.PROPERTY_SEED)

@pytest.fixture
def clean_config():
    """Remove the config file before and after a test."""
    C.CONFIG_JSON_FILE_PATH.unlink(missing_ok=True)
    yield C.CONFIG_JSON_FILE_PATH
    C.CONFIG_JSON_FILE_PATH.unlink(missing_ok=True)
