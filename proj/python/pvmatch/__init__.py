"""Pattern matching with variables under edit distance."""

import json as _json

from ._pvmatch import (
    BudgetExceeded,
    InvalidInput,
    ParseError,
    classify,
    edit_distance,
    gen_hardness,
    lemma_check,
    median,
)

__all__ = [
    "BudgetExceeded",
    "InvalidInput",
    "ParseError",
    "classify",
    "edit_distance",
    "gen_hardness",
    "lemma_check",
    "match",
    "median",
    "min_distance",
]


def min_distance(pattern, word, delta=None, algo="auto"):
    """Minimum distance report as a dict (same shape as the CLI's --json)."""
    from ._pvmatch import min_json

    return _json.loads(min_json(pattern, word, delta, algo))


def match(pattern, word, delta, algo="auto"):
    """Decision report: is the distance at most ``delta``?"""
    from ._pvmatch import match_json

    return _json.loads(match_json(pattern, word, delta, algo))
