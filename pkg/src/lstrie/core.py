"""Core linear-size suffix trie structure.

The tree is text-free: every edge carries a single symbol plus a "+" flag
saying whether the underlying (uncompacted) path is longer than one symbol.
Nodes are either type 1 (root, branching nodes, and suffix/leaf nodes) or
type 2 (unary nodes whose suffix link points at a type-1 node).  Label
content beyond the first symbol is never stored; it is recovered on demand
through fast links (see fastlink.py / matching.py).
"""

from __future__ import annotations

from typing import Iterator, Optional

Symbol = int  # byte value 0..255
NodeId = int  # arena index

# Virtual parent of the root.  child(BOTTOM, c) == root and
# rlink(BOTTOM, c) == root for every symbol c.  Never stored in the arena.
BOTTOM: NodeId = -1

TYPE1 = 1
TYPE2 = 2

_MAGIC = b"LST1"
_FL_MAGIC = b"FLNK"


class Node:
    __slots__ = (
        "kind",
        "plus",
        "parent",
        "incoming_label",
        "children",
        "slink",
        "rlinks",
        "strie_depth",
        "leaf_start",
        "first_sym",
    )

    def __init__(
        self,
        kind: int,
        parent: NodeId,
        incoming_label: Optional[Symbol],
        strie_depth: int,
        first_sym: Optional[Symbol],
    ) -> None:
        self.kind = kind
        self.plus = False  # incoming edge represents a path longer than 1
        self.parent = parent
        self.incoming_label = incoming_label
        self.children: dict[Symbol, NodeId] = {}
        self.slink: Optional[NodeId] = None
        self.rlinks: dict[Symbol, NodeId] = {}
        self.strie_depth = strie_depth  # -1 while an open leaf (see leaf_start)
        self.leaf_start: Optional[int] = None  # 1-based suffix start of an open leaf
        self.first_sym = first_sym  # first symbol of the node's string


class Lst:
    """Arena-allocated linear-size suffix trie (or pre-trie).

    Nodes are identified by dense integer ids; id 0 is the root.  Nodes are
    never deleted — type promotion happens in place.
    """

    __slots__ = ("nodes", "text_len", "type1_count", "type2_count", "plus_count")

    root: NodeId = 0

    def __init__(self) -> None:
        self.nodes: list[Node] = [Node(TYPE1, BOTTOM, None, 0, None)]
        self.text_len = 0
        self.type1_count = 1
        self.type2_count = 0
        self.plus_count = 0

    # -- construction primitives ------------------------------------------

    def new_node(
        self,
        kind: int,
        parent: NodeId,
        incoming_label: Symbol,
        strie_depth: int,
    ) -> NodeId:
        """Allocate a node; the caller wires it into parent.children itself."""
        par = self.nodes[parent]
        first = incoming_label if parent == self.root else par.first_sym
        self.nodes.append(Node(kind, parent, incoming_label, strie_depth, first))
        if kind == TYPE1:
            self.type1_count += 1
        else:
            self.type2_count += 1
        return len(self.nodes) - 1

    def promote(self, u: NodeId) -> None:
        """Flip a type-2 node to type 1 in place."""
        node = self.nodes[u]
        assert node.kind == TYPE2
        node.kind = TYPE1
        self.type2_count -= 1
        self.type1_count += 1

    def set_plus(self, u: NodeId, flag: bool) -> None:
        node = self.nodes[u]
        if node.plus != flag:
            node.plus = flag
            self.plus_count += 1 if flag else -1

    # -- navigation --------------------------------------------------------

    def child(self, u: NodeId, c: Symbol) -> Optional[NodeId]:
        if u == BOTTOM:
            return self.root
        return self.nodes[u].children.get(c)

    def parent(self, u: NodeId) -> NodeId:
        return self.nodes[u].parent

    def t1parent(self, u: NodeId) -> NodeId:
        """Nearest type-1 proper ancestor (BOTTOM above the root)."""
        p = self.nodes[u].parent
        while p != BOTTOM and self.nodes[p].kind == TYPE2:
            p = self.nodes[p].parent
        return p

    def t1child(self, u: NodeId, c: Symbol) -> NodeId:
        """Nearest type-1 descendant through the c-child, skipping the
        unary type-2 chain below it."""
        v = self.nodes[u].children[c]
        while self.nodes[v].kind == TYPE2:
            v = next(iter(self.nodes[v].children.values()))
        return v

    def unique_child(self, u: NodeId) -> tuple[Symbol, NodeId]:
        node = self.nodes[u]
        assert len(node.children) == 1, "unique_child on a branching node"
        return next(iter(node.children.items()))

    def depth(self, u: NodeId) -> int:
        """STrie depth; live (growing) depth for open leaves."""
        if u == BOTTOM:
            return -1
        node = self.nodes[u]
        if node.leaf_start is not None:
            return self.text_len - node.leaf_start + 1
        return node.strie_depth

    def edge_len(self, v: NodeId) -> int:
        """Uncompacted length of the edge entering v."""
        return self.depth(v) - self.depth(self.nodes[v].parent)

    def recompute_plus(self, v: NodeId) -> None:
        """Refresh v's + flag from the depth gap of its incoming edge."""
        self.set_plus(v, self.edge_len(v) > 1)

    def set_slink(self, u: NodeId, target: Optional[NodeId]) -> None:
        """Point u's suffix link at target, keeping reverse links in sync."""
        node = self.nodes[u]
        if node.slink is not None and node.first_sym is not None:
            old = self.nodes[node.slink]
            if old.rlinks.get(node.first_sym) == u:
                del old.rlinks[node.first_sym]
        node.slink = target
        if target is not None and node.first_sym is not None:
            self.nodes[target].rlinks[node.first_sym] = u

    # -- type-2 fan-out (called just before promoting u to type 1) ---------

    def create_type2_fanout(self, u: NodeId, b: Optional[Symbol] = None) -> int:
        """Materialize every d·u node that u's promotion to type 1 forces.

        b is the label of u's original child edge (defaults to the unique
        child, for callers promoting a still-unary node).  For each symbol
        d with a registered reverse link at u's nearest type-1 descendant
        Z, the node for d·u is spliced into the edge above rlink(Z, d)
        unless that position is already materialized or lies above the
        edge.  Returns the number of nodes created.
        """
        node = self.nodes[u]
        assert node.kind == TYPE2
        if b is None:
            b, _ = self.unique_child(u)
        z = self.t1child(u, b)
        du_depth = self.depth(u) + 1
        created = 0
        for d in sorted(self.nodes[z].rlinks):
            q = self.nodes[z].rlinks[d]
            p = self.nodes[q].parent
            p_depth = self.depth(p)
            if p_depth >= du_depth:
                continue  # d·u already materialized (p or an ancestor of p)
            a = self.nodes[q].incoming_label
            assert a is not None
            r = self.new_node(TYPE2, p, a, du_depth)
            self.nodes[p].children[a] = r
            self.nodes[r].children[b] = q
            self.nodes[q].parent = r
            self.nodes[q].incoming_label = b
            self.recompute_plus(r)
            self.recompute_plus(q)
            self.set_slink(r, u)
            created += 1
        return created

    # -- traversal / serialization ------------------------------------------

    def preorder(self) -> Iterator[NodeId]:
        """Iterative preorder walk, children in symbol order."""
        stack = [self.root]
        while stack:
            u = stack.pop()
            yield u
            kids = self.nodes[u].children
            for c in sorted(kids, reverse=True):
                stack.append(kids[c])

    def canonical_form(self) -> bytes:
        """Canonical byte serialization; equal bytes == equal structure.

        Per node (preorder, children visited in symbol order): parent rank
        + 1, incoming label, kind, + flag, STrie depth (live depth for open
        leaves), suffix-link rank + 1 (0 if unset).  Reverse links are
        derivable and not emitted.  The + bit is recomputed from the depth
        gap rather than read from the stored flag, so growing (open) leaf
        edges serialize correctly mid-construction; on sealed trees the two
        always agree.
        """
        order = list(self.preorder())
        rank = {u: i for i, u in enumerate(order)}
        out = bytearray(_MAGIC)
        _write_uv(out, len(order))
        for u in order:
            node = self.nodes[u]
            if u == self.root:
                _write_uv(out, 0)
            else:
                _write_uv(out, rank[node.parent] + 1)
                assert node.incoming_label is not None
                out.append(node.incoming_label)
            out.append(node.kind)
            out.append(1 if (u != self.root and self.edge_len(u) > 1) else 0)
            _write_uv(out, self.depth(u))
            if node.slink is None:
                _write_uv(out, 0)
            else:
                _write_uv(out, rank[node.slink] + 1)
        return bytes(out)

    def stats(self) -> dict:
        return {
            "n": self.text_len,
            "type1": self.type1_count,
            "type2": self.type2_count,
            "plus": self.plus_count,
        }


# -- index file format -------------------------------------------------------
#
# canonical_form bytes, then "FLNK", a count, and one (child_rank, u_rank,
# v_rank) varint triple per +-edge, sorted by child_rank.  Node ids of a
# loaded tree coincide with canonical preorder ranks.


def to_index_bytes(lst: Lst, fastlinks: dict[NodeId, tuple[NodeId, NodeId]]) -> bytes:
    order = list(lst.preorder())
    rank = {u: i for i, u in enumerate(order)}
    out = bytearray(lst.canonical_form())
    out += _FL_MAGIC
    triples = sorted((rank[b], rank[u], rank[v]) for b, (u, v) in fastlinks.items())
    _write_uv(out, len(triples))
    for b_rank, u_rank, v_rank in triples:
        _write_uv(out, b_rank)
        _write_uv(out, u_rank)
        _write_uv(out, v_rank)
    return bytes(out)


def from_index_bytes(data: bytes) -> tuple[Lst, dict[NodeId, tuple[NodeId, NodeId]]]:
    """Parse an index file.  Raises ValueError on malformed input."""
    if data[: len(_MAGIC)] != _MAGIC:
        raise ValueError("not an index file (bad magic)")
    pos = len(_MAGIC)
    count, pos = _read_uv(data, pos)
    if count < 1:
        raise ValueError("index contains no nodes")
    lst = Lst()
    records = []
    for i in range(count):
        parent_rank, pos = _read_uv(data, pos)
        if parent_rank == 0:
            if i != 0:
                raise ValueError("non-root node without a parent")
            label = None
        else:
            if parent_rank > i:  # parents precede children in preorder
                raise ValueError("parent rank out of order")
            if pos >= len(data):
                raise ValueError("truncated index")
            label = data[pos]
            pos += 1
        if pos + 2 > len(data):
            raise ValueError("truncated index")
        kind = data[pos]
        plus = data[pos + 1]
        pos += 2
        if kind not in (TYPE1, TYPE2) or plus not in (0, 1):
            raise ValueError("corrupt node record")
        depth, pos = _read_uv(data, pos)
        slink_rank, pos = _read_uv(data, pos)
        if slink_rank > count:
            raise ValueError("suffix link rank out of range")
        records.append((parent_rank, label, kind, plus, depth, slink_rank))

    max_depth = 0
    for i, (parent_rank, label, kind, plus, depth, _) in enumerate(records):
        if i == 0:
            if kind != TYPE1 or depth != 0:
                raise ValueError("corrupt root record")
            continue
        parent = parent_rank - 1
        u = lst.new_node(kind, parent, label, depth)
        assert u == i
        lst.nodes[parent].children[label] = u
        if plus:
            lst.set_plus(u, True)
        max_depth = max(max_depth, depth)
    for i, (_, _, _, _, _, slink_rank) in enumerate(records):
        if slink_rank:
            lst.set_slink(i, slink_rank - 1)
    lst.text_len = max_depth

    if data[pos : pos + len(_FL_MAGIC)] != _FL_MAGIC:
        raise ValueError("missing fast-link section")
    pos += len(_FL_MAGIC)
    n_links, pos = _read_uv(data, pos)
    fl: dict[NodeId, tuple[NodeId, NodeId]] = {}
    for _ in range(n_links):
        b_rank, pos = _read_uv(data, pos)
        u_rank, pos = _read_uv(data, pos)
        v_rank, pos = _read_uv(data, pos)
        if max(b_rank, u_rank, v_rank) >= count:
            raise ValueError("fast link rank out of range")
        fl[b_rank] = (u_rank, v_rank)
    if pos != len(data):
        raise ValueError("trailing bytes after index")
    return lst, fl


# -- LEB128 varints -----------------------------------------------------------


def _write_uv(out: bytearray, x: int) -> None:
    assert x >= 0
    while True:
        b = x & 0x7F
        x >>= 7
        if x:
            out.append(b | 0x80)
        else:
            out.append(b)
            return


def _read_uv(data: bytes, pos: int) -> tuple[int, int]:
    x = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise ValueError("truncated varint")
        b = data[pos]
        pos += 1
        x |= (b & 0x7F) << shift
        if not (b & 0x80):
            return x, pos
        shift += 7
        if shift > 63:
            raise ValueError("varint too long")
