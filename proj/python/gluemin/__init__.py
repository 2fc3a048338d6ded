"""Exact-rational minimization of set, weighted and glued automata.

Documents are the same canonical JSON strings the ``gluemin`` CLI reads and
writes; every function accepts a ``wfa`` or ``glued_automaton`` document.
"""

from _gluemin import (
    GluedError,
    canonicalize,
    equiv,
    eval,
    linearize,
    minimize,
    obs,
    reach,
    stats,
    validate,
)

__all__ = [
    "GluedError",
    "canonicalize",
    "equiv",
    "eval",
    "linearize",
    "minimize",
    "obs",
    "reach",
    "stats",
    "validate",
]
