# %% [markdown]
# # Walking through one pass
#
# The builder reads the suffix array, LCP array and BWT of the reversed
# text in one left-to-right sweep, peeking at most one column ahead. It
# keeps two small structures:
#
# * a monotone stack answering "nearest column to the left with a smaller
#   LCP" (`b(i)`),
# * `rowList`, at most one candidate per character, sorted by weight.
#
# A candidate leaves `rowList` for the output once the LCP drops below its
# weight, since no later column can beat it from then on.

# %%
from suffixient import load_text
from suffixient.trace import format_trace, trace

t = load_text(b"AGCACAGCA")
cols = trace(t)
print(format_trace(t, cols))

# %% [markdown]
# Each column is the state *after* iteration i. The three heavy
# candidates sitting in `rowList` at column 5 get ejected at column 6,
# where LCP falls to 0. The last column is the final flush.

# %%
for c in cols[4:6]:
    rows = [(r.p_text, t.label(r.char), r.weight) for r in c.rows]
    print(f"i={c.i} lcp={c.lcp} rows={rows} results={c.results}")

# %% [markdown]
# ## The stack stays shallow
#
# The stack never grows past h + 1, where h is the number of branching
# nodes on the deepest path of the suffix tree of the reversed text. A
# run of one letter is the worst case: each LCP is larger than the last,
# so nothing is ever popped.

# %%
from suffixient.oracle import suffix_tree_height
from suffixient.pipeline import suffixient_array
from suffixient.text import reverse_text

for raw in [b"aaaaaaaa", b"abababab", b"AGCACAGCA", b"abcdefgh"]:
    tt = load_text(raw)
    depth = suffixient_array(tt).stats.stack_max_depth
    h = suffix_tree_height(reverse_text(tt))
    print(f"{raw.decode():10} depth={depth} h+1={h + 1}")

# %% [markdown]
# ## One pass, enforced
#
# `AuditingStream` refuses any read outside the window {cursor, cursor+1}
# and counts how often each column is touched.

# %%
from suffixient import AuditingStream, build_suffixient
from suffixient.pipeline import index_text

stream = AuditingStream(index_text(t))
build_suffixient(stream)
print("advances:", stream.advances, " n:", t.n)
print("max reads of one column:", stream.max_materializations)
