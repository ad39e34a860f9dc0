import sys
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

pytest_plugins = ["tests.fixtures.conftest"]
