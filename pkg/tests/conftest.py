"""Test-suite bootstrap: make the in-tree package importable as-is."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))
