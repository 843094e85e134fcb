# %% [markdown]
# # Quickstart
#
# A suffixient array is a smallest set of text positions such that every
# right-maximal substring followed by one more character ends at one of
# them. Positions are listed so the prefixes they end are in colex order.
#
# This script builds one for a short DNA string, looks at the pieces
# the pass produces, and checks the answer against brute force.

# %%
from suffixient import load_text, suffixient_array
from suffixient.oracle import Oracle, exhaustive_min_size, verify_suffixient

t = load_text(b"AGCACAGCA")
print("n =", t.n, " sigma =", t.sigma)
print("T =", "".join(t.label(c) for c in t.symbols))

# %%
result = suffixient_array(t)
sa = result.array
print("positions:", sa.positions)
print("chi:", sa.chi)

# %% [markdown]
# The output comes grouped by the character each position ends with, in
# rank order ($ < A < C < G). Concatenating the groups gives the array.

# %%
for rank, group in enumerate(sa.groups):
    print(f"{t.label(rank)}: {list(group)}")

# %%
for key, value in result.stats.as_dict().items():
    print(f"{key:22s} {value}")

# %% [markdown]
# ## Checking it
#
# The oracle works from the text alone: it sorts prefixes, enumerates
# right-maximal substrings and tries every subset for the minimum.

# %%
o = Oracle(t)
print("suffixient:", verify_suffixient(t, sa.positions))
print("same as the definitional set:", sa.positions == o.full_l)
print("minimum size by exhaustive search:", exhaustive_min_size(t))

# %% [markdown]
# Dropping any position breaks the property. Without position 1, the
# extension "AG" no longer ends any listed prefix.

# %%
for p in sa.positions:
    rest = [q for q in sa.positions if q != p]
    print(f"without {p:2d}: suffixient = {verify_suffixient(t, rest)}")

# %% [markdown]
# Arbitrary bytes work too. A 0x00 byte is reserved for the sentinel.

# %%
for raw in [b"a", b"aaaa", b"abab", b"mississippi", b"banana bandana"]:
    out = suffixient_array(raw).array
    print(f"{raw!r:20} chi={out.chi:2d} positions={out.positions}")
