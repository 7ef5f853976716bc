"""Detect intrinsically knotted and intrinsically linked graphs.

The IK test searches for an embedding with no double-linked D4 minor by
solving linear systems in crossing-change variables; failure to find one
proves the graph intrinsically knotted.
"""

__version__ = "0.1.0"

from .graph import Cycle, Graph, GraphFormatError, enumerate_cycles, parse_graph  # noqa: E402
from .pipeline import Verdict, detect_ik, prepare  # noqa: E402
from .il import detect_il, detect_zero_linking  # noqa: E402
from .search import Status  # noqa: E402

__all__ = [
    "Cycle",
    "Graph",
    "GraphFormatError",
    "Status",
    "Verdict",
    "detect_il",
    "detect_ik",
    "detect_zero_linking",
    "enumerate_cycles",
    "parse_graph",
    "prepare",
]
