"""Fast links for + edges.

The fast link of a + edge (U, V) is the pair (slink^h(U), slink^h(V)) for
the smallest h >= 1 that is not an edge of the tree; decompaction jumps
there to read label symbols.  Computing one link reduces to a
nearest-marked-ancestor question on the suffix-link tree, where a node X
is "marked" exactly when slink(parent(X)) != parent(slink(X)).

Offline: one pass over + edges by increasing child depth, O(n) total.
Online: walk the suffix-link chain until the first marked node, O(h) per
query (no incremental marked-ancestor bookkeeping is maintained).
"""

from __future__ import annotations

from typing import Callable, Optional

from .core import BOTTOM, Lst, NodeId

FastLink = tuple[NodeId, NodeId]
FlProvider = Callable[[NodeId], Optional[FastLink]]


def compute_offline(lst: Lst) -> dict[NodeId, FastLink]:
    """Fast links for every + edge, keyed by the edge's child node.

    Processes edges shallow-to-deep: either the image pair diverges
    immediately (h = 1) or the answer equals the image edge's, which is
    strictly shallower and already known.  Edges whose suffix-link chain
    is incomplete (possible on pre-tries) are left out.
    """
    links: dict[NodeId, FastLink] = {}
    plus_children = [
        v for v in lst.preorder() if v != lst.root and lst.edge_len(v) > 1
    ]
    plus_children.sort(key=lst.depth)
    for v in plus_children:
        u = lst.nodes[v].parent
        assert u != lst.root, "+ edge out of the root"
        sv = lst.nodes[v].slink
        su = lst.nodes[u].slink
        if sv is None or su is None:
            continue
        if lst.nodes[sv].parent != su:
            links[v] = (su, sv)
        elif sv in links:
            links[v] = links[sv]
    return links


def fastlink_online(lst: Lst, v: NodeId) -> Optional[FastLink]:
    """Fast link of the edge entering v, computed on the live tree.

    Walks x = v, slink(v), slink^2(v), ... until the marked predicate
    fires; each unmarked step keeps the invariant parent(slink(x)) =
    slink(parent(x)), so the pair at the first marked node is the answer.
    Returns None if a suffix link is missing (dangling shortest leaf
    during left-to-right construction) or the chain reaches the root.
    """
    x = v
    while True:
        sx = lst.nodes[x].slink
        if sx is None:
            return None
        px = lst.nodes[x].parent
        if px == lst.root:
            su: NodeId = BOTTOM
        else:
            su = lst.nodes[px].slink  # type: ignore[assignment]
            assert su is not None, "internal node without a suffix link"
        if lst.nodes[sx].parent != su:
            if su == BOTTOM:
                return None  # would pair with the virtual bottom node
            return (su, sx)
        x = sx


class FastLinkIndex:
    """Lookup front-end for fast links: a precomputed table ("offline")
    or per-query suffix-link walks on the live tree ("online")."""

    __slots__ = ("lst", "mode", "links", "queries")

    def __init__(self, lst: Lst, mode: str = "offline") -> None:
        if mode not in ("offline", "online"):
            raise ValueError(f"unknown mode {mode!r}")
        self.lst = lst
        self.mode = mode
        self.links: dict[NodeId, FastLink] = (
            compute_offline(lst) if mode == "offline" else {}
        )
        self.queries = 0

    def fast_link(self, v: NodeId) -> Optional[FastLink]:
        self.queries += 1
        if self.mode == "offline":
            return self.links.get(v)
        return fastlink_online(self.lst, v)


class NmaTree:
    """Dynamic rooted tree with marked nodes and nearest-marked-ancestor
    queries (the node itself counts).  Queries walk upward; updates are
    O(1).  Node 0 is the root, unmarked initially."""

    __slots__ = ("parent", "marked")

    def __init__(self) -> None:
        self.parent: list[int] = [-1]
        self.marked: list[bool] = [False]

    def insert_leaf(self, parent: int) -> int:
        self.parent.append(parent)
        self.marked.append(False)
        return len(self.parent) - 1

    def set_mark(self, v: int, flag: bool) -> None:
        self.marked[v] = flag

    def query(self, v: int) -> Optional[int]:
        while v != -1:
            if self.marked[v]:
                return v
            v = self.parent[v]
        return None
