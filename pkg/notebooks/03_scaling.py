# %% [markdown]
# # Scaling
#
# Indexing plus one pass on repetitive inputs of growing size: copies of
# a 10 KB random DNA seed, each with a few point mutations. Work should
# grow linearly, so doubling n should roughly double the pass time.
#
# Set `SUFFIXIENT_MAX_MB` to go larger; the default stops at 8 MB.

# %%
import os
import time

import numpy as np

from suffixient.fast import build_from_arrays_fast
from suffixient.pipeline import build_from_arrays, index_text
from suffixient.text import load_text
from suffixient.textgen import mutated_copies

max_mb = int(os.environ.get("SUFFIXIENT_MAX_MB", "8"))
sizes = [s for s in (1, 2, 4, 8, 16, 32) if s <= max_mb]

# compile or load the numba kernels before timing anything
build_from_arrays(index_text(load_text(b"warm up")))

# %%
def best_pass_seconds(arrays, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        build_from_arrays_fast(arrays)
        times.append(time.perf_counter() - start)
    return min(times)


rows = []
for mb in sizes:
    raw = mutated_copies(np.random.default_rng(7), 10_000, mb * 100)
    t0 = time.perf_counter()
    arrays = index_text(load_text(raw))
    t1 = time.perf_counter()
    res = build_from_arrays_fast(arrays)
    rows.append((mb, t1 - t0, best_pass_seconds(arrays), res.stats))

print(f"{'MB':>4} {'index s':>8} {'pass s':>8} {'chi':>8} {'pushes/n':>9} {'ins/n':>7} {'depth':>6}")
for mb, ti, tp, s in rows:
    print(f"{mb:4d} {ti:8.2f} {tp:8.3f} {s.chi:8d} {s.stack_pushes / s.n:9.3f} "
          f"{s.rowlist_insertions / s.n:7.3f} {s.stack_max_depth:6d}")

# %% [markdown]
# Ratio of pass times between consecutive sizes; close to 2 means linear.

# %%
for (a, _, ta, _), (b, _, tb, _) in zip(rows, rows[1:]):
    print(f"{a} -> {b} MB: x{tb / ta:.2f}")
