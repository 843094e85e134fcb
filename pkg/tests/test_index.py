import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import TABLE
from suffixient.index import build_index, dump_arrays, load_arrays
from suffixient.oracle import naive_lcp, naive_suffix_array
from suffixient.text import load_text, reverse_text

texts = st.binary(min_size=1, max_size=120).filter(lambda b: 0 not in b)


def labels(t, ranks):
    return "".join(t.label(int(r)) for r in ranks)


def test_worked_example_arrays(golden):
    idx = build_index(reverse_text(golden))
    assert idx.sa.tolist() == TABLE["SA"]
    assert idx.lcp.tolist() == TABLE["LCP"]
    assert labels(golden, idx.bwt) == TABLE["BWT"]
    assert idx.isa[idx.sa - 1].tolist() == list(range(1, 11))


@pytest.mark.parametrize(
    "raw, sa, lcp, bwt",
    [
        (b"a", [2, 1], [-1, 0], "a$"),
        (b"aaaa", [5, 4, 3, 2, 1], [-1, 0, 1, 2, 3], "aaaa$"),
    ],
)
def test_small_arrays(raw, sa, lcp, bwt):
    t = load_text(raw)
    idx = build_index(reverse_text(t))
    assert idx.sa.tolist() == sa
    assert idx.lcp.tolist() == lcp
    assert labels(t, idx.bwt) == bwt


@settings(max_examples=300)
@given(texts)
def test_against_brute_force(raw):
    rev = reverse_text(load_text(raw))
    idx = build_index(rev)
    sa = naive_suffix_array(rev)
    assert idx.sa.tolist() == sa
    assert idx.lcp.tolist() == naive_lcp(rev, sa)
    s = rev.as_bytes()
    assert idx.bwt.tolist() == [s[(p - 2) % len(s)] for p in sa]
    assert sorted(idx.sa.tolist()) == list(range(1, rev.n + 1))


def test_sais_on_long_repetitive_input():
    rng = np.random.default_rng(5)
    raw = bytes(rng.choice(list(b"ab"), 3000).tolist()) * 3
    rev = reverse_text(load_text(raw))
    idx = build_index(rev)
    s = rev.as_bytes()
    keys = [s[p - 1:] for p in idx.sa.tolist()]
    assert all(a < b for a, b in zip(keys, keys[1:]))


def test_dump_round_trip(tmp_path, golden):
    idx = build_index(reverse_text(golden))
    path = tmp_path / "arrays.txt"
    dump_arrays(idx, path)
    back = load_arrays(path)
    assert back.sigma == idx.sigma
    for name in ("sa", "isa", "lcp", "bwt"):
        assert np.array_equal(getattr(back, name), getattr(idx, name))
