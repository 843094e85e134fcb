"""Suffix array, inverse suffix array, LCP and BWT of the reversed text.

The suffix array is built with induced sorting (SA-IS); the heavy loops are
numba-compiled and the recursion on the reduced string is driven from Python.
LCP uses Kasai's inverse-suffix-array scan.

Stored arrays are 0-based numpy storage holding 1-based *values*: ``sa[k-1]``
is ``SA[k]``, ``lcp[0]`` is ``LCP[1] = -1``, ``bwt[k-1]`` is ``BWT[k]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numba
import numpy as np

from .text import Text


@numba.njit(cache=True)
def _classify(s):
    n = s.shape[0]
    stype = np.zeros(n, dtype=np.bool_)
    stype[n - 1] = True
    for i in range(n - 2, -1, -1):
        if s[i] < s[i + 1]:
            stype[i] = True
        elif s[i] == s[i + 1]:
            stype[i] = stype[i + 1]
    return stype


@numba.njit(cache=True)
def _lms_positions(stype):
    n = stype.shape[0]
    count = 0
    for i in range(1, n):
        if stype[i] and not stype[i - 1]:
            count += 1
    out = np.empty(count, dtype=np.int64)
    k = 0
    for i in range(1, n):
        if stype[i] and not stype[i - 1]:
            out[k] = i
            k += 1
    return out


@numba.njit(cache=True)
def _buckets(s, k, ends):
    counts = np.zeros(k, dtype=np.int64)
    for i in range(s.shape[0]):
        counts[s[i]] += 1
    out = np.empty(k, dtype=np.int64)
    acc = 0
    for c in range(k):
        acc += counts[c]
        out[c] = acc if ends else acc - counts[c]
    return out


@numba.njit(cache=True)
def _induce(s, k, stype, lms_sorted, sa):
    n = s.shape[0]
    sa[:] = -1
    tails = _buckets(s, k, True)
    for j in range(lms_sorted.shape[0] - 1, -1, -1):
        p = lms_sorted[j]
        c = s[p]
        tails[c] -= 1
        sa[tails[c]] = p
    heads = _buckets(s, k, False)
    for i in range(n):
        p = sa[i]
        if p > 0 and not stype[p - 1]:
            c = s[p - 1]
            sa[heads[c]] = p - 1
            heads[c] += 1
    tails = _buckets(s, k, True)
    for i in range(n - 1, -1, -1):
        p = sa[i]
        if p > 0 and stype[p - 1]:
            c = s[p - 1]
            tails[c] -= 1
            sa[tails[c]] = p - 1


@numba.njit(cache=True)
def _is_lms(stype, i):
    return i > 0 and stype[i] and not stype[i - 1]


@numba.njit(cache=True)
def _lms_equal(s, stype, a, b):
    n = s.shape[0]
    if a == n - 1 or b == n - 1:
        return a == b
    d = 0
    while True:
        if s[a + d] != s[b + d] or stype[a + d] != stype[b + d]:
            return False
        if d > 0:
            la = _is_lms(stype, a + d)
            lb = _is_lms(stype, b + d)
            if la or lb:
                return la and lb
        d += 1


@numba.njit(cache=True)
def _name_lms(s, stype, sa):
    n = s.shape[0]
    names = np.full(n, -1, dtype=np.int64)
    name = -1
    prev = -1
    for i in range(n):
        p = sa[i]
        if _is_lms(stype, p):
            if prev < 0 or not _lms_equal(s, stype, prev, p):
                name += 1
            names[p] = name
            prev = p
    return names, name + 1


def _sais(s: np.ndarray, k: int) -> np.ndarray:
    n = s.shape[0]
    sa = np.empty(n, dtype=np.int64)
    if n == 1:
        sa[0] = 0
        return sa
    stype = _classify(s)
    lms = _lms_positions(stype)
    _induce(s, k, stype, lms, sa)
    names, count = _name_lms(s, stype, sa)
    reduced = names[lms]
    if count < lms.shape[0]:
        reduced_sa = _sais(reduced, count)
    else:
        reduced_sa = np.empty(lms.shape[0], dtype=np.int64)
        reduced_sa[reduced] = np.arange(lms.shape[0])
    _induce(s, k, stype, lms[reduced_sa], sa)
    return sa


@numba.njit(cache=True)
def _kasai(s, sa, isa):
    n = s.shape[0]
    lcp = np.zeros(n, dtype=np.int64)
    h = 0
    for i in range(n):
        r = isa[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and s[i + h] == s[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    lcp[0] = -1
    return lcp


def build_suffix_array(rev: Text) -> np.ndarray:
    """Suffix array of a sentinel-terminated text, as 1-based positions."""
    s = np.ascontiguousarray(rev.symbols, dtype=np.int64)
    return _sais(s, rev.sigma) + 1


def inverse_permutation(sa: np.ndarray) -> np.ndarray:
    """``isa[sa[k] - 1] = k`` with 1-based ranks."""
    isa = np.empty_like(sa)
    isa[sa - 1] = np.arange(1, sa.shape[0] + 1, dtype=sa.dtype)
    return isa


def build_lcp(rev: Text, sa: np.ndarray, isa: np.ndarray) -> np.ndarray:
    s = np.ascontiguousarray(rev.symbols, dtype=np.int64)
    return _kasai(s, np.ascontiguousarray(sa - 1), np.ascontiguousarray(isa - 1))


def build_bwt(rev: Text, sa: np.ndarray) -> np.ndarray:
    """``BWT[i] = $`` when ``SA[i] = 1``, else ``T^rev[SA[i] - 1]``."""
    sym = np.asarray(rev.symbols, dtype=np.int64)
    # sa - 2 wraps to the last symbol, which is the sentinel, exactly when SA[i] = 1
    return sym[sa - 2]


@dataclass(frozen=True, eq=False)
class IndexArrays:
    sa: np.ndarray
    isa: np.ndarray
    lcp: np.ndarray
    bwt: np.ndarray
    sigma: int

    @property
    def n(self) -> int:
        return int(self.sa.shape[0])


def build_index(rev: Text) -> IndexArrays:
    sa = build_suffix_array(rev)
    isa = inverse_permutation(sa)
    lcp = build_lcp(rev, sa, isa)
    bwt = build_bwt(rev, sa)
    for a in (sa, isa, lcp, bwt):
        a.setflags(write=False)
    return IndexArrays(sa, isa, lcp, bwt, rev.sigma)


def dump_arrays(arrays: IndexArrays, path: str | Path) -> None:
    """Write SA, LCP and BWT as decimal sections, one value per line."""
    with open(path, "w") as fh:
        fh.write(f"# n={arrays.n} sigma={arrays.sigma}\n")
        for name, values in (("SA", arrays.sa), ("LCP", arrays.lcp), ("BWT", arrays.bwt)):
            fh.write(f"[{name}]\n")
            fh.write("\n".join(map(str, values.tolist())))
            fh.write("\n")


def load_arrays(path: str | Path) -> IndexArrays:
    sections: dict[str, list[int]] = {}
    sigma = None
    current = None
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for field in line[1:].split():
                    key, _, value = field.partition("=")
                    if key == "sigma":
                        sigma = int(value)
            elif line.startswith("["):
                current = line.strip("[]")
                sections[current] = []
            else:
                sections[current].append(int(line))
    sa = np.array(sections["SA"], dtype=np.int64)
    lcp = np.array(sections["LCP"], dtype=np.int64)
    bwt = np.array(sections["BWT"], dtype=np.int64)
    if sigma is None:
        sigma = int(bwt.max()) + 1
    return IndexArrays(sa, inverse_permutation(sa), lcp, bwt, sigma)
