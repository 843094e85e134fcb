"""Seeded text generators for tests, benchmarks and the demo scripts."""
from __future__ import annotations

import numpy as np

from .text import Text, load_text

LETTERS = b"abcdefghijklmnopqrstuvwxyz"


def uniform(rng: np.random.Generator, length: int, alphabet: int) -> bytes:
    return np.frombuffer(LETTERS[:alphabet], np.uint8)[rng.integers(0, alphabet, length)].tobytes()


def repetitive(rng: np.random.Generator, length: int, alphabet: int, mutation_rate: float = 0.05) -> bytes:
    """Copies of a short random seed with sparse point mutations."""
    seed_len = int(rng.integers(2, max(3, length // 3) + 1))
    seed = uniform(rng, seed_len, alphabet)
    out = bytearray((seed * (length // seed_len + 1))[:length])
    for k in np.flatnonzero(rng.random(length) < mutation_rate):
        out[k] = LETTERS[int(rng.integers(0, alphabet))]
    return bytes(out)


def run_heavy(rng: np.random.Generator, length: int, alphabet: int, mean_run: float = 4.0) -> bytes:
    out = bytearray()
    while len(out) < length:
        c = LETTERS[int(rng.integers(0, alphabet))]
        out.extend(bytes([c]) * int(rng.geometric(1.0 / mean_run)))
    return bytes(out[:length])


def fibonacci_word(length: int) -> bytes:
    a, b = b"a", b"ab"
    while len(b) < length:
        a, b = b, b + a
    return b[:length]


GENERATORS = {"uniform": uniform, "repetitive": repetitive, "run_heavy": run_heavy}


def text_suite(count: int, seed: int, n_range=(2, 300), sigma_range=(2, 8)) -> list[tuple[str, Text]]:
    """``count`` texts cycling through the generators.

    ``n_range`` bounds the text length including the sentinel and
    ``sigma_range`` the alphabet size including the sentinel; the body
    alphabet actually used may come out smaller than requested.
    """
    rng = np.random.default_rng(seed)
    names = list(GENERATORS)
    out = []
    for k in range(count):
        name = names[k % len(names)]
        length = int(rng.integers(n_range[0], n_range[1] + 1)) - 1
        alphabet = int(rng.integers(sigma_range[0], sigma_range[1] + 1)) - 1
        raw = GENERATORS[name](rng, length, alphabet)
        out.append((name, load_text(raw)))
    return out


def mutated_copies(rng: np.random.Generator, seed_len: int, copies: int, mutations: int = 10,
                   alphabet: bytes = b"ACGT") -> bytes:
    """Large repetitive input: ``copies`` versions of one random seed, each
    with ``mutations`` point substitutions."""
    letters = np.frombuffer(alphabet, np.uint8)
    seed = letters[rng.integers(0, len(letters), seed_len)]
    block = np.tile(seed, copies)
    offsets = rng.integers(0, seed_len, (copies, mutations)) + (np.arange(copies) * seed_len)[:, None]
    block[offsets.ravel()] = letters[rng.integers(0, len(letters), offsets.size)]
    return block.tobytes()
