"""Naive reference implementations used for verification.

Everything here favors obviousness over speed: the uncompacted suffix trie
is built explicitly, node classification follows the definitions literally,
and the matching / fast-link answers are produced by brute force.  This is
the only module that keeps the text next to the structure.  Builds are
capped at 4096 symbols.
"""

from __future__ import annotations

from typing import Optional

from .core import TYPE1, TYPE2, Lst, NodeId, Symbol

MAX_ORACLE_TEXT = 4096


class OracleTrie:
    """Uncompacted suffix trie with online front and back extension.

    Node 0 is the root (empty string).  `full_node` is the node of the
    whole current text; the suffix-representing nodes are exactly the
    suffix-link chain from `full_node` down to the root.
    """

    def __init__(self) -> None:
        self.text = bytearray()
        self.parent: list[int] = [0]
        self.pchar: list[Optional[int]] = [None]
        self.depth: list[int] = [0]
        self.children: list[dict[int, int]] = [{}]
        self.slink: list[Optional[int]] = [None]
        self.full_node = 0
        # prefix_path[d] = node of text[:d]
        self.prefix_path: list[int] = [0]

    def _new(self, parent: int, c: int) -> int:
        v = len(self.parent)
        self.parent.append(parent)
        self.pchar.append(c)
        self.depth.append(self.depth[parent] + 1)
        self.children.append({})
        self.slink.append(None)
        self.children[parent][c] = v
        return v

    def push_front(self, c: int) -> None:
        """Prepend a symbol: insert the new full string, linking each new
        prefix node to the corresponding prefix of the old text."""
        if len(self.text) >= MAX_ORACLE_TEXT:
            raise ValueError("oracle text cap exceeded")
        self.text.insert(0, c)
        new_path = [0]
        cur = 0
        for d, s in enumerate(self.text, start=1):
            nxt = self.children[cur].get(s)
            if nxt is None:
                nxt = self._new(cur, s)
                self.slink[nxt] = self.prefix_path[d - 1]
            cur = nxt
            new_path.append(cur)
        self.prefix_path = new_path
        self.full_node = cur

    def append(self, c: int) -> None:
        """Append a symbol: extend every current suffix (shallowest first,
        so each new node's suffix-link target already exists)."""
        if len(self.text) >= MAX_ORACLE_TEXT:
            raise ValueError("oracle text cap exceeded")
        self.text.append(c)
        chain = self.suffix_nodes()  # deepest first
        prev = 0
        for s_node in reversed(chain):
            v = self.children[s_node].get(c)
            if v is None:
                v = self._new(s_node, c)
                self.slink[v] = prev
            prev = v
        self.full_node = prev
        self.prefix_path.append(prev)

    def suffix_nodes(self) -> list[int]:
        """Nodes representing suffixes of the current text, deepest first
        (the root / empty suffix included)."""
        chain = []
        v: Optional[int] = self.full_node
        while v is not None:
            chain.append(v)
            v = self.slink[v]
        assert chain[-1] == 0
        return chain

    def node_count(self) -> int:
        return len(self.parent)


def build_strie(text: bytes) -> OracleTrie:
    trie = OracleTrie()
    for c in text:
        trie.append(c)
    return trie


def _derive(trie: OracleTrie, pre: bool) -> tuple[Lst, dict[NodeId, int]]:
    """Compact the suffix trie down to its kept (type-1 and type-2) nodes.

    Also returns the mapping from compacted node ids back to trie nodes,
    which the label / fast-link cross-checks need."""
    n_nodes = trie.node_count()
    suffix_set = set(trie.suffix_nodes())

    kind = [0] * n_nodes  # 0 = implicit
    for v in range(n_nodes):
        n_kids = len(trie.children[v])
        if pre:
            t1 = v == 0 or n_kids >= 2 or n_kids == 0
        else:
            t1 = v == 0 or n_kids >= 2 or v in suffix_set
        if t1:
            kind[v] = TYPE1
    for v in range(1, n_nodes):
        s = trie.slink[v]
        if kind[v] == 0 and s is not None and kind[s] == TYPE1:
            kind[v] = TYPE2

    lst = Lst()
    lst.text_len = len(trie.text)
    core_id: dict[int, NodeId] = {0: lst.root}
    # stack entries: (trie node, nearest kept ancestor's core id, entry symbol)
    stack: list[tuple[int, NodeId, Optional[int]]] = []
    for c in sorted(trie.children[0], reverse=True):
        stack.append((trie.children[0][c], lst.root, c))
    while stack:
        v, anc, entry = stack.pop()
        if kind[v]:
            assert entry is not None
            u = lst.new_node(kind[v], anc, entry, trie.depth[v])
            lst.nodes[anc].children[entry] = u
            lst.recompute_plus(u)
            core_id[v] = u
            anc = u
            for c in sorted(trie.children[v], reverse=True):
                stack.append((trie.children[v][c], anc, c))
        else:
            for c in sorted(trie.children[v], reverse=True):
                stack.append((trie.children[v][c], anc, entry))
    for v, u in core_id.items():
        s = trie.slink[v]
        if v != 0 and s is not None and s in core_id:
            lst.set_slink(u, core_id[s])
    back = {u: v for v, u in core_id.items()}
    return lst, back


def derive_lst(trie: OracleTrie) -> Lst:
    """Compacted form keeping root, branching, and suffix nodes (+ type 2)."""
    return _derive(trie, pre=False)[0]


def derive_prelst(trie: OracleTrie) -> Lst:
    """Compacted form keeping root, branching, and childless nodes (+ type 2)."""
    return _derive(trie, pre=True)[0]


def derive_lst_mapped(trie: OracleTrie) -> tuple[Lst, dict[NodeId, int]]:
    return _derive(trie, pre=False)


def derive_prelst_mapped(trie: OracleTrie) -> tuple[Lst, dict[NodeId, int]]:
    return _derive(trie, pre=True)


def naive_fastlink(
    lst: Lst, u: NodeId, v: NodeId
) -> Optional[tuple[NodeId, NodeId, int]]:
    """First (slink^h(u), slink^h(v)) that is not an edge, by definition.

    Returns None when a needed suffix link is missing (possible on
    pre-tries) or when no h within the depth bound works (non-+ edges)."""
    limit = lst.depth(u) + 2
    uc: Optional[NodeId] = u
    vc: Optional[NodeId] = v
    for h in range(1, limit + 1):
        uc = lst.nodes[uc].slink if uc is not None else None
        vc = lst.nodes[vc].slink if vc is not None else None
        if uc is None or vc is None:
            return None
        if lst.nodes[vc].parent != uc:
            return (uc, vc, h)
    return None


def trie_string(trie: OracleTrie, v: int) -> bytes:
    """The string spelled by the root-to-v path of the trie."""
    out = bytearray()
    while v != 0:
        out.append(trie.pchar[v])  # type: ignore[arg-type]
        v = trie.parent[v]
    out.reverse()
    return bytes(out)


def naive_edge_label(trie: OracleTrie, lst: Lst, back: dict[NodeId, int], v: NodeId) -> bytes:
    """Full label of the compacted edge entering v, read off the trie."""
    s = trie_string(trie, back[v])
    return s[lst.depth(lst.nodes[v].parent) :]


def naive_longest_prefix(text: bytes, pattern: bytes) -> tuple[int, bool]:
    """Longest prefix of pattern occurring as a substring of text."""
    lo = 0
    for k in range(1, len(pattern) + 1):
        if pattern[:k] in text:
            lo = k
        else:
            break
    return lo, lo == len(pattern)


def naive_contains(text: bytes, pattern: bytes) -> bool:
    return pattern in text
