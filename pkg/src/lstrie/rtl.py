"""Right-to-left online construction.

`push_front(c)` turns the tree of T into the tree of cT.  The attach point
for the new leaf is found by walking reverse links upward from the previous
attach point; every type-1 node passed on the way up gets its c-image
materialized as a type-2 node on the new leaf's path, which is exactly the
set of nodes the new symbol forces.  Amortized O(1) parent hops per push
(the attach point's depth can only grow by one per step).

Fast links are not maintained here; compute them offline afterwards
(fastlink.compute_offline).
"""

from __future__ import annotations

from .core import BOTTOM, TYPE1, TYPE2, Lst, NodeId, Symbol


class RtlBuilder:
    __slots__ = (
        "lst",
        "prev_ins_point",
        "prev_leaf",
        "prev_label",
        "up_steps",
        "type2_created",
        "rlink_lookups",
    )

    def __init__(self) -> None:
        self.lst = Lst()
        self.prev_ins_point: NodeId = BOTTOM
        self.prev_leaf: NodeId = self.lst.root
        self.prev_label: Symbol | None = None
        self.up_steps = 0
        self.type2_created = 0
        self.rlink_lookups = 0

    def push_front(self, c: Symbol) -> None:
        lst = self.lst
        lst.text_len += 1

        # Ascend until a node with a c-reverse-link (the virtual bottom node
        # has one for every symbol).  Record the type-1 nodes passed: each
        # needs its c-image created on the new leaf's path.  `label` tracks
        # the entry symbol of the path from the current node down toward the
        # previous leaf.
        steps: list[tuple[NodeId, Symbol]] = []
        u = self.prev_ins_point
        label = self.prev_label
        while u != BOTTOM:
            self.rlink_lookups += 1
            if c in lst.nodes[u].rlinks:
                break
            if lst.nodes[u].kind == TYPE1:
                assert label is not None
                steps.append((u, label))
            label = lst.nodes[u].incoming_label
            u = lst.nodes[u].parent
            self.up_steps += 1

        if u == BOTTOM:
            insert_point = lst.root
            attach_label = c
        else:
            insert_point = lst.nodes[u].rlinks[c]
            assert label is not None
            attach_label = label

        # If the attach point is type 2 it becomes branching now, which can
        # force c-image nodes of its own; the fan-out must run after the new
        # leaf is wired in (the leaf can be the image's only carrier), so
        # only capture the old child label here.
        ip_was_type2 = lst.nodes[insert_point].kind == TYPE2
        old_child_label: Symbol | None = None
        if ip_was_type2:
            old_child_label, _ = lst.unique_child(insert_point)

        # Build the image chain top-down, then the new leaf at the bottom.
        parent_cur = insert_point
        incoming = attach_label
        for node, a in reversed(steps):
            assert incoming not in lst.nodes[parent_cur].children
            x = lst.new_node(TYPE2, parent_cur, incoming, lst.depth(node) + 1)
            lst.nodes[parent_cur].children[incoming] = x
            assert lst.nodes[x].first_sym == c
            lst.recompute_plus(x)
            lst.set_slink(x, node)
            self.type2_created += 1
            parent_cur = x
            incoming = a

        assert incoming not in lst.nodes[parent_cur].children
        leaf = lst.new_node(TYPE1, parent_cur, incoming, lst.text_len)
        lst.nodes[parent_cur].children[incoming] = leaf
        assert lst.nodes[leaf].first_sym == c
        lst.recompute_plus(leaf)
        lst.set_slink(leaf, self.prev_leaf)

        if ip_was_type2:
            assert old_child_label is not None
            self.type2_created += lst.create_type2_fanout(insert_point, old_child_label)
            lst.promote(insert_point)

        self.prev_ins_point = insert_point
        self.prev_leaf = leaf
        self.prev_label = attach_label

    def build(self, text: bytes) -> Lst:
        for c in reversed(text):
            self.push_front(c)
        return self.lst
