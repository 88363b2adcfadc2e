"""Online left-to-right construction of the linear-size suffix pre-trie.

One `push` per text symbol, amortized O(1) structural work plus the
decompaction hops of the active-point walker.  The builder is text-free:
it never buffers the input, and every symbol it needs later (edge
continuations, split labels) is captured from the structure at the moment
a decision is made.

After pushing T entirely, the tree equals the pre-trie of T; `finish`
seals the growing leaf edges and — when the last symbol of T occurs
nowhere else — the result is exactly the suffix trie a right-to-left
build of T produces.

State between pushes:
  * leaves[0..]   leaf node for suffix j+1; suffixes >= k have no leaf yet
  * walker        the locus of T[k..i], either at a node or suspended
                  inside an edge (image position + return frames)
  * newest leaf's suffix link mirrors the dangling-link rule: set to the
    active node when the locus is a node, unset while it is inside an edge
"""

from __future__ import annotations

from typing import Optional

from .core import BOTTOM, TYPE1, TYPE2, Lst, NodeId, Symbol
from .fastlink import fastlink_online
from .matching import Walker


class LtrBuilder:
    """Incremental left-to-right builder; `push` symbols, then `finish`."""

    __slots__ = (
        "lst",
        "walk",
        "k",
        "leaves",
        "edge_parent",
        "edge_label",
        "_seen",
        "_last",
        "_finished",
    )

    def __init__(self) -> None:
        self.lst = Lst()
        self.walk = Walker(self.lst, lambda v: fastlink_online(self.lst, v))
        self.k = 1  # next suffix (1-based) still waiting for its leaf
        self.leaves: list[NodeId] = []
        self.edge_parent: NodeId = self.lst.root
        self.edge_label: Optional[Symbol] = None
        self._seen = [0] * 256
        self._last: Optional[Symbol] = None
        self._finished = False

    # -- public interface ----------------------------------------------------

    @property
    def fastlink_apps(self) -> int:
        """Fast-link applications so far (queries + fallback strips)."""
        return self.walk.hops

    def push(self, c: Symbol) -> None:
        """Extend the indexed text by one symbol."""
        assert not self._finished
        lst = self.lst
        lst.text_len += 1
        self._seen[c] += 1
        self._last = c
        w = self.walk
        if w.at_node():
            node = w.cur
            # The newest leaf's previous endpoint becomes a forced type-2
            # node whenever its suffix-link target (this node) is, or is
            # promoted to, type 1 this push.
            if self.k >= 2 and (
                lst.nodes[node].kind == TYPE1 or lst.child(node, c) is None
            ):
                self._materialize_endpoint(c, node)
            ch = lst.child(node, c)  # re-resolve: the split may rewire it
            if ch is None:
                self._cascade(node, self.leaves[-1] if self.leaves else None, c)
            else:
                self._unsync()
                self._enter(node, ch)
        else:
            if w.next_symbol() == c:
                self._unsync()
                w.step()
            else:
                self._split(c)
        self._sync()

    def build(self, text: bytes) -> None:
        for c in text:
            self.push(c)

    def finish(self, require_terminal: bool = True) -> Lst:
        """Seal growing leaf edges.  With require_terminal, refuse texts
        whose final symbol repeats earlier (the sealed tree would be the
        pre-trie, not the suffix trie)."""
        assert not self._finished
        if require_terminal and self._last is not None and self._seen[self._last] > 1:
            raise ValueError("final symbol occurs earlier in the text")
        lst = self.lst
        for leaf in self.leaves:
            nd = lst.nodes[leaf]
            assert nd.leaf_start is not None
            nd.strie_depth = lst.text_len - nd.leaf_start + 1
            nd.leaf_start = None
            lst.recompute_plus(leaf)
        self._finished = True
        return self.lst

    # -- newest-leaf bookkeeping ----------------------------------------------

    def _unsync(self) -> None:
        # The newest leaf's link predates this push's growth; drop it so
        # decompaction falls back to slink strips instead of trusting it.
        if self.leaves:
            self.lst.set_slink(self.leaves[-1], None)

    def _sync(self) -> None:
        if self.leaves:
            target = self.walk.cur if self.walk.at_node() else None
            self.lst.set_slink(self.leaves[-1], target)

    def _materialize_endpoint(self, c: Symbol, target: Optional[NodeId]) -> NodeId:
        """Split the newest leaf's edge at the position the leaf occupied
        before this push; `target` (when known now) is its slink."""
        lst = self.lst
        leaf = self.leaves[-1]
        nd = lst.nodes[leaf]
        p = nd.parent
        d_w = lst.depth(leaf) - 1
        assert lst.depth(p) < d_w
        a = nd.incoming_label
        assert a is not None
        wn = lst.new_node(TYPE2, p, a, d_w)
        lst.nodes[p].children[a] = wn
        lst.nodes[wn].children[c] = leaf
        nd.parent = wn
        nd.incoming_label = c
        lst.recompute_plus(wn)
        lst.recompute_plus(leaf)
        if target is not None:
            lst.set_slink(wn, target)
        return wn

    # -- structural phases -----------------------------------------------------

    def _enter(self, parent: NodeId, child: NodeId) -> None:
        self.edge_parent = parent
        self.walk.reset_to(parent)
        self.edge_label = self.walk.enter(child)

    def _cascade(self, v_cur: NodeId, prev_leaf: Optional[NodeId], c: Symbol) -> None:
        """Attach a leaf for each suffix level missing a c-child, then
        consume c at the first level that has one."""
        lst = self.lst
        while True:
            ch = lst.child(v_cur, c)
            if ch is not None:
                break
            node = lst.nodes[v_cur]
            if node.kind == TYPE2:
                # about to branch: promotion forces its implicit preimages
                lst.create_type2_fanout(v_cur)
                lst.promote(v_cur)
            leaf = lst.new_node(TYPE1, v_cur, c, -1)
            lst.nodes[leaf].leaf_start = self.k
            node.children[c] = leaf
            lst.recompute_plus(leaf)
            if prev_leaf is not None:
                lst.set_slink(prev_leaf, leaf)
            prev_leaf = leaf
            self.leaves.append(leaf)
            self.k += 1
            v_cur = BOTTOM if v_cur == lst.root else node.slink
            assert v_cur is not None
        if v_cur == BOTTOM:
            # consuming c on the bottom edge lands exactly at the root
            self.walk.reset_to(lst.root)
        else:
            self._enter(v_cur, ch)

    def _split(self, c: Symbol) -> None:
        """The locus sits inside an edge whose next symbol differs from c:
        split every slink level of the locus until it lands on an existing
        node, then continue with the ordinary cascade from there."""
        lst = self.lst
        w = self.walk
        b = w.next_symbol()  # old continuation; identical at every level
        anchor = self.edge_parent
        sym = self.edge_label
        rem = w.consumed
        assert rem >= 1 and sym is not None
        # The locus becomes a (type-1) node, so the newest leaf's previous
        # endpoint is forced; its slink target is the first split node.
        pending = self._materialize_endpoint(c, None)
        prev_leaf = self.leaves[-1]
        while True:
            d_need = lst.depth(anchor) + rem
            cur = anchor
            s: Symbol = sym
            while True:
                nxt = lst.child(cur, s)
                assert nxt is not None
                dn = lst.depth(nxt)
                if dn >= d_need:
                    break
                cur = nxt
                s, _ = lst.unique_child(cur)
            if dn == d_need:
                # landed on a materialized node: chain and hand off
                lst.set_slink(pending, nxt)
                self._cascade(nxt, prev_leaf, c)
                return
            z = lst.new_node(TYPE2, cur, s, d_need)
            lst.nodes[cur].children[s] = z
            lst.nodes[z].children[b] = nxt
            ndn = lst.nodes[nxt]
            ndn.parent = z
            ndn.incoming_label = b
            lst.recompute_plus(z)
            lst.recompute_plus(nxt)
            lst.create_type2_fanout(z)
            lst.promote(z)
            lst.set_slink(pending, z)
            pending = z
            leaf = lst.new_node(TYPE1, z, c, -1)
            lst.nodes[leaf].leaf_start = self.k
            lst.nodes[z].children[c] = leaf
            lst.recompute_plus(leaf)
            lst.set_slink(prev_leaf, leaf)
            prev_leaf = leaf
            self.leaves.append(leaf)
            self.k += 1
            assert cur != lst.root, "a locus never sits inside a root edge"
            rem = d_need - lst.depth(cur)
            nxt_anchor = lst.nodes[cur].slink
            assert nxt_anchor is not None
            anchor = nxt_anchor
            sym = s
