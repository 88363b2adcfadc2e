"""Pattern matching through fast-link decompaction, judged against plain
substring search on the original text."""

import random

import pytest

from lstrie.fastlink import FastLinkIndex, compute_offline, fastlink_online
from lstrie.matching import (
    Walker,
    contains,
    extract_label,
    fast_matching,
    longest_prefix_match,
)
from lstrie.oracle import (
    build_strie,
    derive_lst_mapped,
    derive_prelst_mapped,
    naive_edge_label,
    naive_contains,
    naive_longest_prefix,
)
from lstrie.rtl import RtlBuilder

from conftest import SEALED_TEXTS, random_text


def all_substrings(text):
    out = {b""}
    for i in range(len(text)):
        for j in range(i + 1, len(text) + 1):
            out.add(text[i:j])
    return out


def near_misses(rng, patterns):
    out = set()
    for p in patterns:
        if p:
            mut = bytearray(p)
            k = rng.randrange(len(mut))
            mut[k] ^= 1 + rng.randrange(255)
            out.add(bytes(mut))
        out.add(p + bytes([rng.randrange(256)]))
    return out


@pytest.mark.parametrize("text", SEALED_TEXTS)
def test_lpm_exhaustive_fixed(text):
    lst = RtlBuilder().build(text)
    links = compute_offline(lst)
    rng = random.Random(len(text))
    for p in sorted(all_substrings(text) | near_misses(rng, sorted(all_substrings(text)))):
        want_len, want_full = naive_longest_prefix(text, p)
        got = longest_prefix_match(lst, links, p)
        assert (got.matched_len, got.full_match) == (want_len, want_full), p
        assert contains(lst, links, p) == naive_contains(text, p)
        # locus sanity: matched length fits inside the reported position
        if got.matched_len:
            node_depth = lst.depth(got.node)
            if got.consumed:
                edge = lst.edge_len(got.node)
                assert got.matched_len == node_depth - edge + got.consumed
            else:
                assert got.matched_len == node_depth


def test_match_outcome_frozen_examples():
    lst = RtlBuilder().build(b"abaaba$")
    links = compute_offline(lst)
    out = longest_prefix_match(lst, links, b"aab")
    assert (out.matched_len, out.full_match) == (3, True)
    out = longest_prefix_match(lst, links, b"abab")
    assert (out.matched_len, out.full_match) == (3, False)
    out = longest_prefix_match(lst, links, b"")
    assert (out.matched_len, out.full_match, out.consumed, out.hops) == (0, True, 0, 0)


def test_lpm_random_texts_online_links():
    rng = random.Random(41)
    for _ in range(25):
        text = random_text(rng, rng.choice([1, 2, 4]), rng.randrange(1, 48))
        lst = RtlBuilder().build(text)
        fl = FastLinkIndex(lst, "online")
        pats = set(random_text(rng, 4, rng.randrange(0, 12)) for _ in range(40))
        pats |= near_misses(rng, sorted(all_substrings(text))[:40])
        for p in sorted(pats):
            want = naive_longest_prefix(text, p)
            got = longest_prefix_match(lst, fl.fast_link, p)
            assert (got.matched_len, got.full_match) == want


@pytest.mark.parametrize("derive", [derive_lst_mapped, derive_prelst_mapped])
@pytest.mark.parametrize("text", SEALED_TEXTS)
def test_extract_label_both_tree_kinds(text, derive):
    trie = build_strie(text)
    lst, back = derive(trie)
    links = compute_offline(lst)
    for v in lst.preorder():
        if v == lst.root:
            continue
        assert extract_label(lst, links, v) == naive_edge_label(trie, lst, back, v)


@pytest.mark.parametrize("text", SEALED_TEXTS)
def test_label_extraction_hop_bound(text):
    """On a sealed tree (total links) recovering an l-symbol label costs
    fewer than l link applications."""
    lst = RtlBuilder().build(text)
    links = compute_offline(lst)
    for v in lst.preorder():
        if v == lst.root:
            continue
        w = Walker(lst, links, start=lst.nodes[v].parent)
        label = bytearray([w.enter(v)])
        while not w.at_node():
            label.append(w.step())
        assert len(label) == lst.edge_len(v)
        assert w.hops < max(1, len(label))


def test_walker_hops_zero_on_plain_edges():
    lst = RtlBuilder().build(b"ab$")
    links = compute_offline(lst)
    for pattern in (b"a", b"b", b"$"):  # single-symbol edges from the root
        assert longest_prefix_match(lst, links, pattern).hops == 0
    # whereas reading into the + edge below "a" costs exactly one jump
    assert longest_prefix_match(lst, links, b"ab").hops == 1


def test_fast_matching_agrees_when_sound():
    """On patterns the tree can only witness contiguously (no + edge is
    left mid-read) both substring tests agree."""
    for text in SEALED_TEXTS:
        lst = RtlBuilder().build(text)
        links = compute_offline(lst)
        for p in sorted(all_substrings(text)):
            assert fast_matching(lst, links, p) is True  # real substrings always pass
        assert fast_matching(lst, links, text + b"#") is False


def test_fast_matching_known_false_accept():
    """Frozen divergence witness: raw decompaction-jump matching accepts
    'baba' against the index of 'abab$' because two overlapping fragments
    each occur, even though 'baba' itself never does.  The outcome is
    pinned so any behavior change here is loud."""
    text = b"abab$"
    lst = RtlBuilder().build(text)
    links = compute_offline(lst)
    assert not naive_contains(text, b"baba")
    assert contains(lst, links, b"baba") is False
    assert fast_matching(lst, links, b"baba") is True


def test_fast_matching_never_rejects_real_substrings():
    rng = random.Random(43)
    for _ in range(30):
        text = random_text(rng, 2, rng.randrange(1, 32))
        lst = RtlBuilder().build(text)
        links = compute_offline(lst)
        for p in all_substrings(text):
            assert fast_matching(lst, links, p) is True
