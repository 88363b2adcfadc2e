"""Fast-link computation: offline table, online walk, naive definition,
and the nearest-marked-ancestor helper."""

import random

import pytest

from lstrie.fastlink import FastLinkIndex, NmaTree, compute_offline, fastlink_online
from lstrie.ltr import LtrBuilder
from lstrie.oracle import build_strie, derive_lst, derive_prelst, naive_fastlink
from lstrie.rtl import RtlBuilder

from conftest import OPEN_TEXTS, SEALED_TEXTS, random_text


def assert_links_match_naive(lst):
    offline = compute_offline(lst)
    plus_edges = 0
    for v in lst.preorder():
        if v == lst.root or lst.edge_len(v) <= 1:
            continue
        plus_edges += 1
        naive = naive_fastlink(lst, lst.nodes[v].parent, v)
        want = None if naive is None else (naive[0], naive[1])
        assert offline.get(v) == want
        assert fastlink_online(lst, v) == want
    assert len(offline) <= plus_edges
    return plus_edges


@pytest.mark.parametrize("text", SEALED_TEXTS)
def test_sealed_trees_have_total_links(text):
    lst = RtlBuilder().build(text)
    offline = compute_offline(lst)
    plus_edges = assert_links_match_naive(lst)
    assert len(offline) == plus_edges  # no danglers once sealed


@pytest.mark.parametrize("text", OPEN_TEXTS)
def test_pretrees_may_dangle(text):
    assert_links_match_naive(derive_prelst(build_strie(text)))


def test_links_on_live_builder_tree():
    """Regression: the offline pass must see the + edges of a mid-build
    tree (open leaf edges lengthen implicitly and carry no stored flag)."""
    builder = LtrBuilder()
    for c in b"aba":
        builder.push(c)
    links = compute_offline(builder.lst)
    assert len(links) == 1
    (v, pair), = links.items()
    assert fastlink_online(builder.lst, v) == pair
    assert_links_match_naive(builder.lst)


def test_links_random_live_trees():
    rng = random.Random(31)
    for _ in range(30):
        text = random_text(rng, rng.choice([1, 2, 4]), rng.randrange(0, 32))
        builder = LtrBuilder()
        for c in text:
            builder.push(c)
            assert_links_match_naive(builder.lst)


def test_fastlink_index_modes_and_counting():
    lst = RtlBuilder().build(b"abaaba$")
    offline = FastLinkIndex(lst, "offline")
    online = FastLinkIndex(lst, "online")
    for v in lst.preorder():
        if v == lst.root or lst.edge_len(v) <= 1:
            continue
        assert offline.fast_link(v) == online.fast_link(v) is not None
    assert offline.queries == online.queries == 4
    with pytest.raises(ValueError):
        FastLinkIndex(lst, "psychic")


def naive_nma(tree, v):
    while v != -1:
        if tree.marked[v]:
            return v
        v = tree.parent[v]
    return None


def test_nma_random_ops():
    rng = random.Random(37)
    tree = NmaTree()
    nodes = [0]
    for _ in range(3000):
        op = rng.random()
        if op < 0.45:
            nodes.append(tree.insert_leaf(rng.choice(nodes)))
        elif op < 0.7:
            tree.set_mark(rng.choice(nodes), rng.random() < 0.5)
        else:
            v = rng.choice(nodes)
            assert tree.query(v) == naive_nma(tree, v)
