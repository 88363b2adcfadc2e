"""Pattern matching and label extraction by fast-link decompaction.

Edge labels beyond their first symbol are not stored anywhere; they are
recovered one symbol at a time by jumping along fast links into suffix-link
image space, where every symbol of the label is the first symbol of some
edge.  The walker below keeps a stack of return positions so a jump that
finishes an image edge resumes the enclosing one; a landing strictly inside
an image path always sits on a type-2 (unary) node, so no choices are ever
needed mid-edge.

longest_prefix_match: O(m log sigma + hops), hops <= 2*matched + (symbols
matched before the final edge), per the decompaction charging.
extract_label: < len(label) jumps on trees with complete suffix links.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import TYPE2, Lst, NodeId, Symbol
from .fastlink import FastLinkIndex, FlProvider


def _provider(fl: Union[FastLinkIndex, dict, FlProvider]) -> FlProvider:
    if isinstance(fl, FastLinkIndex):
        return fl.fast_link
    if isinstance(fl, dict):
        return fl.get
    return fl


@dataclass
class MatchOutcome:
    """Result of a prefix match.

    consumed == 0 means the locus is exactly at `node`; otherwise the
    locus lies `consumed` symbols into the (compacted) edge entering
    `node`."""

    matched_len: int
    full_match: bool
    node: NodeId
    consumed: int
    hops: int = 0


class Walker:
    """Symbol-at-a-time cursor over compacted edges.

    State is either *at* a real node (`outer is None`) or inside the
    top-level edge entering `outer`, resting at image node `cur` with
    `consumed` symbols of that edge read.  `frames` holds (node,
    completes_at) return positions for image edges whose reading is
    suspended by a deeper jump."""

    __slots__ = ("lst", "fl", "cur", "outer", "consumed", "frames", "hops")

    def __init__(self, lst: Lst, fl, start: Optional[NodeId] = None) -> None:
        self.lst = lst
        self.fl = _provider(fl)
        self.cur: NodeId = lst.root if start is None else start
        self.outer: Optional[NodeId] = None
        self.consumed = 0
        self.frames: list[tuple[NodeId, int]] = []
        self.hops = 0

    def at_node(self) -> bool:
        return self.outer is None

    def reset_to(self, node: NodeId) -> None:
        """Abandon any suspended edge and stand at `node` (hops persist)."""
        self.cur = node
        self.outer = None
        self.consumed = 0
        self.frames.clear()

    def enter(self, child: NodeId) -> Symbol:
        """From an at-node state, start reading the edge to `child`;
        consumes and returns the edge's first symbol."""
        assert self.outer is None
        lst = self.lst
        s1 = lst.nodes[child].incoming_label
        assert s1 is not None
        self.outer = child
        self.consumed = 0
        if lst.nodes[child].leaf_start is None:
            self.frames.append((child, lst.edge_len(child)))
        self._descend(self.cur, child, s1)
        return s1

    def next_symbol(self) -> Symbol:
        """The forced next symbol when inside an edge (cur is unary)."""
        assert self.outer is not None
        node = self.lst.nodes[self.cur]
        assert len(node.children) == 1, "mid-edge cursor on a branching node"
        return next(iter(node.children))

    def step(self) -> Symbol:
        """Consume the forced next symbol."""
        s, nxt = self.lst.unique_child(self.cur)
        self._descend(self.cur, nxt, s)
        return s

    def _descend(self, a: NodeId, b: NodeId, s1: Symbol) -> None:
        """Consume exactly one symbol (s1, the label of edge (a, b)),
        jumping into image space while the edge is compacted."""
        lst = self.lst
        while True:
            span = lst.depth(b) - lst.depth(a)
            assert span >= 1
            if span == 1:
                self.consumed += 1
                self._settle(b)
                return
            # Reading a + edge: suspend it (unless it is a still-growing
            # leaf edge, which can never complete, or its completion lies
            # beyond the enclosing frame and would go stale).
            if lst.nodes[b].leaf_start is None:
                target = self.consumed + span
                if not self.frames or target <= self.frames[-1][1]:
                    self.frames.append((b, target))
            link = self.fl(b)
            self.hops += 1
            if link is not None:
                a = link[0]
            else:
                # Dangling fast link (pre-tries): strip one suffix level.
                # The strip is itself a link application, so count it too.
                self.hops += 1
                nxt = lst.nodes[a].slink
                assert nxt is not None, "fallback from a node without slink"
                a = nxt
            b2 = lst.nodes[a].children.get(s1)
            assert b2 is not None, "image path lost its first symbol"
            b = b2

    def _settle(self, node: NodeId) -> None:
        cur = node
        while self.frames and self.frames[-1][1] == self.consumed:
            cur = self.frames.pop()[0]
        self.cur = cur
        if not self.frames and self.outer is not None:
            if self.lst.nodes[self.outer].leaf_start is None:
                assert cur == self.outer
                self.outer = None


def longest_prefix_match(lst: Lst, fl, pattern: bytes) -> MatchOutcome:
    """Longest prefix of `pattern` that is a substring of the indexed text."""
    w = Walker(lst, fl)
    matched = 0
    edge_start = 0  # symbols matched before entering the current edge
    for p in pattern:
        if w.at_node():
            child = lst.nodes[w.cur].children.get(p)
            if child is None:
                break
            edge_start = matched
            w.enter(child)
        else:
            if w.next_symbol() != p:
                break
            w.step()
        matched += 1
    assert w.hops <= 2 * matched + edge_start, "decompaction hop bound exceeded"
    if w.at_node():
        node, consumed = w.cur, 0
    else:
        node, consumed = w.outer, w.consumed  # type: ignore[assignment]
    return MatchOutcome(matched, matched == len(pattern), node, consumed, w.hops)


def contains(lst: Lst, fl, pattern: bytes) -> bool:
    """Substring test (empty pattern is always present)."""
    return longest_prefix_match(lst, fl, pattern).full_match


def extract_label(lst: Lst, fl, v: NodeId) -> bytes:
    """Recover the full label of the (compacted) edge entering v without
    any stored text; < len(label) fast-link jumps when links are total."""
    parent = lst.nodes[v].parent
    assert parent != -1, "the root has no incoming edge"
    w = Walker(lst, fl, start=parent)
    out = bytearray([w.enter(v)])
    while not w.at_node():
        out.append(w.step())
    assert w.cur == v
    return bytes(out)


def fast_matching(lst: Lst, fl, pattern: bytes) -> bool:
    """Substring test by raw decompaction jumps, with no bookkeeping
    beyond the jump itself.

    Unlike `contains` it keeps no return positions: after a jump it goes
    on matching inside image space, and a pattern that runs out mid-edge
    is accepted on the strength of overlapping fragment certificates
    rather than one contiguous occurrence.  Kept separate so divergence
    from the naive oracle (if any) is observable; `contains` is the sound
    interface."""
    flp = _provider(fl)
    pos = 0

    def decompact(u: NodeId, v: NodeId) -> Optional[NodeId]:
        nonlocal pos
        while u != v:
            if pos >= len(pattern):
                return v  # accepted without reading the remaining gap
            c = pattern[pos]
            ch = lst.nodes[u].children.get(c)
            if ch is None:
                return None
            if lst.edge_len(ch) <= 1:
                u = ch
                pos += 1
            else:
                link = flp(ch)
                if link is None:
                    return None
                r = decompact(link[0], link[1])
                if r is None:
                    return None
                u = r
        return v

    u = lst.root
    while pos < len(pattern):
        ch = lst.nodes[u].children.get(pattern[pos])
        if ch is None:
            return False
        r = decompact(u, ch)
        if r is None:
            return False
        u = r
    return True
