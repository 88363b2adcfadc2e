"""Linear-size suffix tries: online builders, fast-link matching, and a
naive verification oracle."""

from .core import BOTTOM, TYPE1, TYPE2, Lst, Node, from_index_bytes, to_index_bytes
from .fastlink import FastLinkIndex, NmaTree, compute_offline, fastlink_online
from .ltr import LtrBuilder
from .matching import (
    MatchOutcome,
    contains,
    extract_label,
    fast_matching,
    longest_prefix_match,
)
from .rtl import RtlBuilder

__all__ = [
    "BOTTOM",
    "TYPE1",
    "TYPE2",
    "Lst",
    "Node",
    "from_index_bytes",
    "to_index_bytes",
    "FastLinkIndex",
    "NmaTree",
    "compute_offline",
    "fastlink_online",
    "LtrBuilder",
    "MatchOutcome",
    "contains",
    "extract_label",
    "fast_matching",
    "longest_prefix_match",
    "RtlBuilder",
]
