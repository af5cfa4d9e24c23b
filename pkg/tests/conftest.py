import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path for imports
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from core.config_manager import ConfigManager, set_config  # noqa: E402
from core.logger import get_logger  # noqa: E402


@pytest.fixture(autouse=True)
def default_config(tmp_path):
    """Fresh default configuration per test, never backed by a real file."""
    config = ConfigManager(str(tmp_path / "onecenter.json"))
    set_config(config)
    logger = get_logger()
    logger.set_level("WARNING")
    logger.echo = False
    yield config
    logger.clear()
    set_config(None)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
