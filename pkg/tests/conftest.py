"""Shared corpus and small helpers for the test suite."""

import random

# Texts with a unique final symbol (both builders produce the same
# sealed structure for these).
SEALED_TEXTS = [
    b"$",
    b"a$",
    b"ab$",
    b"aab$",
    b"abab$",
    b"abaaba$",
    b"banana$",
    b"mississippi$",
    b"aaaaaaaa$",
    b"aabbaabb$",
    b"abcabxabcd$",
    b"ababababab$",
]

# Prefix-stream texts (terminal may repeat; only the left-to-right
# builder accepts these without sealing).
OPEN_TEXTS = [
    b"",
    b"a",
    b"aa",
    b"aab",
    b"aba",
    b"abab",
    b"aabaa",
    b"mississippi",
    b"bookkeeper",
]


def alphabet(sigma: int) -> bytes:
    if sigma >= 256:
        return bytes(range(256))
    return bytes(97 + i for i in range(sigma))


def random_text(rng: random.Random, sigma: int, length: int) -> bytes:
    a = alphabet(sigma)
    return bytes(rng.choice(a) for _ in range(length))


def random_sealed_text(rng: random.Random, sigma: int, length: int) -> bytes:
    """Random text over a lowercase alphabet with '$' appended ('$' is
    outside every generated alphabet, so it is always unique)."""
    return random_text(rng, sigma, length) + b"$"
