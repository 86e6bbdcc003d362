"""Minimal multiplicity bipartitions of graphs: classification, witness
construction and verification.

Graphs are passed as text in one of three formats, selected by ``format``:
``"graph6"``, ``"dsl"`` (e.g. ``"(K1+K2)*K3"``) or ``"edges"``
(``"n i j i j ..."``).
"""

from ._core import (
    NotConstructible,
    classify,
    construct,
    cotree,
    graph6_decode,
    graph6_encode,
    selftest,
    unique_path_bound,
    verify_matrix,
)

__all__ = [
    "NotConstructible",
    "classify",
    "construct",
    "cotree",
    "graph6_decode",
    "graph6_encode",
    "selftest",
    "unique_path_bound",
    "verify_matrix",
]
