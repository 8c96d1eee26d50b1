import sys
from pathlib import Path

# Modules import each other as top-level packages (core, config, features, ui, utils)
sys.path.insert(0, str(Path(__file__).resolve().parent))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs a verification suite at its full default sample count")
