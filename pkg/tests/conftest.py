"""Shared test plumbing: make the frozen oracle module importable."""

import sys
from pathlib import Path

ORACLES = Path(__file__).parent / "oracles"
if str(ORACLES) not in sys.path:
    sys.path.insert(0, str(ORACLES))
