from __future__ import annotations

import sys
from pathlib import Path

from pgwitness.games import ParityGame

sys.path.insert(0, str(Path(__file__).parent))


def game(owners, colours, succ) -> ParityGame:
    """Compact game builder for hand-written test fixtures."""
    return ParityGame(
        owners=tuple(owners),
        colours=tuple(colours),
        succ=tuple(tuple(s) for s in succ),
    )
