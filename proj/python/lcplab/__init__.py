"""Exact and floating-point toolkit for linear complementarity problems.

Thin wrapper over the C++ core. Rationals cross the boundary as strings
("15/14"), so nothing is rounded on the way in or out.
"""

import json as _json

from ._core import (
    classify_json,
    game_value,
    gen_random,
    gen_structured,
    ppt,
    solve_enumerate,
    solve_ipm,
    solve_lemke,
)

__all__ = [
    "classify",
    "classify_json",
    "game_value",
    "gen_random",
    "gen_structured",
    "ppt",
    "solve_enumerate",
    "solve_ipm",
    "solve_lemke",
]


def classify(a):
    """Full class report for a square matrix, as a dict."""
    return _json.loads(classify_json(a))
