"""Compiled twin of :func:`suffixient.builder.build_suffixient`.

Same pass, same decisions, over raw arrays. Since rowList never holds two
triples for one symbol, its nodes are indexed by symbol: ``nxt[c]``/``prv[c]``
are the links and ``present[c]`` doubles as ``MAP[c] != null``. Column i only
reads columns i - 1 (kept in a local), i and i + 1.
"""
from __future__ import annotations

import time

import numba
import numpy as np

from .builder import BuildResult, RunStats, SuffixientArray
from .index import IndexArrays

# indices into the stats vector returned by the kernel
_PUSHES, _POPS, _DEPTH, _INS, _EJ, _REPL, _MAXROWS = range(7)


@numba.njit(cache=True)
def _compute_b(st_idx, st_val, st_b, top, stats, lcp_i, i):
    t = top[0]
    if st_idx[t] == i:
        return st_b[t]
    while st_val[t] >= lcp_i:
        t -= 1
        stats[_POPS] += 1
    b = st_idx[t]
    t += 1
    st_idx[t] = i
    st_val[t] = lcp_i
    st_b[t] = b
    top[0] = t
    stats[_PUSHES] += 1
    if t + 1 > stats[_DEPTH]:
        stats[_DEPTH] = t + 1
    return b


@numba.njit(cache=True)
def _weight(pre_bwt, curr_bwt, next_bwt, curr_lcp, next_lcp):
    w = -1
    if pre_bwt != -1 and curr_bwt != pre_bwt:
        w = curr_lcp
    if next_bwt != -1 and curr_bwt != next_bwt and next_lcp > w:
        w = next_lcp
    return w


@numba.njit(cache=True)
def _one_pass(sa, lcp, bwt, sigma):
    n = sa.shape[0]
    stats = np.zeros(7, dtype=np.int64)

    nxt = np.full(sigma, -1, dtype=np.int64)
    prv = np.full(sigma, -1, dtype=np.int64)
    present = np.zeros(sigma, dtype=np.bool_)
    pos = np.zeros(sigma, dtype=np.int64)
    wt = np.zeros(sigma, dtype=np.int64)
    head = -1
    size = 0

    prev_idx = np.zeros(sigma, dtype=np.int64)
    prev_wt = np.full(sigma, -1, dtype=np.int64)

    st_idx = np.empty(n + 2, dtype=np.int64)
    st_val = np.empty(n + 2, dtype=np.int64)
    st_b = np.empty(n + 2, dtype=np.int64)
    st_idx[0] = 1
    st_val[0] = -1
    st_b[0] = -1
    top = np.zeros(1, dtype=np.int64)
    stats[_PUSHES] = 1
    stats[_DEPTH] = 1

    out_pos = np.empty(n, dtype=np.int64)
    out_chr = np.empty(n, dtype=np.int64)
    nout = 0

    # step 0
    c1 = bwt[0]
    nb = bwt[1] if n > 1 else -1
    nl = lcp[1] if n > 1 else -1
    w1 = _weight(-1, c1, nb, lcp[0], nl)
    if nb != c1:
        pos[c1] = n - sa[0] + 1
        wt[c1] = w1
        present[c1] = True
        head = c1
        size = 1
        stats[_INS] += 1
        stats[_MAXROWS] = 1
    if w1 > -1:
        prev_idx[c1] = 1
        prev_wt[c1] = w1
    pre_bwt = c1

    for i in range(2, n + 1):
        k = i - 1
        cur_lcp = lcp[k]
        cur_bwt = bwt[k]
        if i < n:
            next_bwt = bwt[k + 1]
            next_lcp = lcp[k + 1]
        else:
            next_bwt = -1
            next_lcp = -1

        # step 1
        while head != -1 and cur_lcp < wt[head]:
            c = head
            out_pos[nout] = pos[c]
            out_chr[nout] = c
            nout += 1
            head = nxt[c]
            if head != -1:
                prv[head] = -1
            present[c] = False
            nxt[c] = -1
            size -= 1
            stats[_EJ] += 1

        # step 2
        w = _weight(pre_bwt, cur_bwt, next_bwt, cur_lcp, next_lcp)
        curr_b = _compute_b(st_idx, st_val, st_b, top, stats, cur_lcp, i)
        if w > -1:
            if w != cur_lcp:
                curr_b = _compute_b(st_idx, st_val, st_b, top, stats, next_lcp, i + 1)
            c = cur_bwt
            if w > cur_lcp or prev_idx[c] < curr_b or prev_wt[c] < w:
                if present[c]:
                    p, q = prv[c], nxt[c]
                    if p != -1:
                        nxt[p] = q
                    else:
                        head = q
                    if q != -1:
                        prv[q] = p
                    size -= 1
                    stats[_REPL] += 1
                pos[c] = n - sa[k] + 1
                wt[c] = w
                present[c] = True
                prv[c] = -1
                nxt[c] = head
                if head != -1:
                    prv[head] = c
                head = c
                size += 1
                stats[_INS] += 1
                if size > stats[_MAXROWS]:
                    stats[_MAXROWS] = size
            prev_idx[c] = i
            prev_wt[c] = w
        pre_bwt = cur_bwt

    # final step
    while head != -1:
        c = head
        out_pos[nout] = pos[c]
        out_chr[nout] = c
        nout += 1
        head = nxt[c]
        stats[_EJ] += 1

    return out_pos[:nout], out_chr[:nout], stats


def build_from_arrays_fast(arrays: IndexArrays) -> BuildResult:
    start = time.perf_counter()
    sa = np.ascontiguousarray(arrays.sa, dtype=np.int64)
    lcp = np.ascontiguousarray(arrays.lcp, dtype=np.int64)
    bwt = np.ascontiguousarray(arrays.bwt, dtype=np.int64)
    out_pos, out_chr, st = _one_pass(sa, lcp, bwt, arrays.sigma)
    # stable grouping keeps ejection order inside each symbol
    order = np.argsort(out_chr, kind="stable")
    counts = np.bincount(out_chr, minlength=arrays.sigma)
    grouped = out_pos[order].tolist()
    groups = []
    at = 0
    for c in range(arrays.sigma):
        groups.append(tuple(grouped[at:at + counts[c]]))
        at += counts[c]
    result = SuffixientArray(tuple(groups), arrays.n, arrays.sigma)
    stats = RunStats(
        n=arrays.n,
        sigma=arrays.sigma,
        chi=result.chi,
        stack_pushes=int(st[_PUSHES]),
        stack_pops=int(st[_POPS]),
        stack_max_depth=int(st[_DEPTH]),
        rowlist_insertions=int(st[_INS]),
        rowlist_ejections=int(st[_EJ]),
        rowlist_replacements=int(st[_REPL]),
        rowlist_max_size=int(st[_MAXROWS]),
        wall_time_ms=(time.perf_counter() - start) * 1e3,
    )
    return BuildResult(result, stats)
