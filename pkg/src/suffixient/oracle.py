"""Brute-force ground truth, built from the text alone.

Nothing here touches SA-IS, Kasai, the stream or the builder: the colex
order of prefixes comes from sorting byte strings, LCP values from direct
comparison, right-maximal substrings from enumerating every substring.
Quadratic (or worse) on purpose; meant for texts of a few hundred symbols.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import SizeLimit
from .text import Text

EXHAUSTIVE_CAP = 14


def naive_suffix_array(rev: Text) -> list[int]:
    s = rev.as_bytes()
    return [k + 1 for k in sorted(range(len(s)), key=lambda k: s[k:])]


def _common_prefix(a: bytes, b: bytes) -> int:
    m = 0
    for x, y in zip(a, b):
        if x != y:
            break
        m += 1
    return m


def naive_lcp(rev: Text, sa: Sequence[int]) -> list[int]:
    s = rev.as_bytes()
    return [-1] + [_common_prefix(s[sa[k - 1] - 1:], s[sa[k] - 1:]) for k in range(1, len(sa))]


def naive_b(lcp: Sequence[int], x: int) -> int:
    """Largest index < x with a smaller LCP, else 1 (indices are 1-based)."""
    for y in range(x - 1, 0, -1):
        if lcp[y - 1] < lcp[x - 1]:
            return y
    return 1


def naive_e(lcp: Sequence[int], x: int) -> int:
    """Smallest index > x with a smaller LCP, else n + 1."""
    n = len(lcp)
    for y in range(x + 1, n + 1):
        if lcp[y - 1] < lcp[x - 1]:
            return y
    return n + 1


@dataclass
class RightMaximalCatalog:
    """Right-maximal substrings and their one-character extensions.

    ``extensions`` maps each extension ``str + c`` to the 1-based span
    ``(start, end)`` of one occurrence, ``T[start..end-1] == str``.
    """

    right_maximal: set[bytes]
    extensions: dict[bytes, tuple[int, int]]

    @cached_property
    def max_length(self) -> int:
        return max(len(r) for r in self.right_maximal)


def right_maximal_catalog(s: bytes) -> RightMaximalCatalog:
    n = len(s)
    right_maximal: set[bytes] = set()
    extensions: dict[bytes, tuple[int, int]] = {}
    for length in range(n):
        follow: dict[bytes, dict[int, int]] = {}
        for i in range(n - length):
            follow.setdefault(s[i:i + length], {}).setdefault(s[i + length], i)
        for sub, chars in follow.items():
            if len(chars) >= 2:
                right_maximal.add(sub)
                for c, i in chars.items():
                    extensions.setdefault(sub + bytes([c]), (i + 1, i + length + 1))
        # a right-maximal string of this length needs a repeat of this length
        if len(follow) == n - length:
            break
    return RightMaximalCatalog(right_maximal, extensions)


def suffix_tree_height(rev: Text) -> int:
    """Most branching nodes on one root-to-leaf path of the suffix trie of ``rev``.

    A trie node is branching exactly when its string is right-maximal, so
    the count for leaf k is the number of right-maximal prefixes of
    ``rev[k:]`` (the empty string, i.e. the root, included).
    """
    s = rev.as_bytes()
    cat = right_maximal_catalog(s)
    top = cat.max_length
    rm = cat.right_maximal
    return max(
        sum(1 for length in range(min(top, len(s) - k) + 1) if s[k:k + length] in rm)
        for k in range(len(s))
    )


def verify_suffixient(t: Text, candidate: Iterable[int], catalog: RightMaximalCatalog | None = None) -> bool:
    """Every one-character right-maximal extension ends some ``T[1..x]``, x in candidate."""
    s = t.as_bytes()
    xs = sorted(set(candidate))
    if catalog is None:
        catalog = right_maximal_catalog(s)
    by_length: dict[int, set[bytes]] = {}
    for ext in catalog.extensions:
        m = len(ext)
        covered = by_length.get(m)
        if covered is None:
            covered = by_length[m] = {s[x - m:x] for x in xs if x >= m}
        if ext not in covered:
            return False
    return True


def exhaustive_min_size(t: Text, cap: int = EXHAUSTIVE_CAP) -> int:
    """Smallest suffixient subset of {1..n}, by trying subsets in size order."""
    n = t.n
    if n > cap:
        raise SizeLimit(f"exhaustive search capped at n <= {cap}, got n = {n}")
    s = t.as_bytes()
    cat = right_maximal_catalog(s)
    masks = []
    for ext in cat.extensions:
        m = len(ext)
        mask = 0
        for x in range(m, n + 1):
            if s[x - m:x] == ext:
                mask |= 1 << (x - 1)
        masks.append(mask)
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            chosen = 0
            for x in combo:
                chosen |= 1 << x
            if all(mask & chosen for mask in masks):
                return k
    return n


def colex_key(s: bytes, p: int) -> bytes:
    return s[:p][::-1]


def is_colex_sorted(t: Text, positions: Sequence[int]) -> bool:
    """Prefixes ``T[1..p]`` strictly increase colexicographically."""
    s = t.as_bytes()
    keys = [colex_key(s, p) for p in positions]
    return all(a < b for a, b in zip(keys, keys[1:]))


class Oracle:
    """Definitional quantities of one text, cached.

    Index x (1-based) denotes the x-th prefix ``T[1..p]``, ``0 <= p < n``, in
    colex order, i.e. the x-th suffix of the reversed text; ``p = n - SA[x]``.
    """

    def __init__(self, t: Text):
        self.text = t
        self.s = t.as_bytes()
        self.n = t.n

    @cached_property
    def prefix_lengths(self) -> list[int]:
        s = self.s
        return sorted(range(self.n), key=lambda p: colex_key(s, p))

    @cached_property
    def sa(self) -> list[int]:
        return [self.n - p for p in self.prefix_lengths]

    @cached_property
    def isa(self) -> list[int]:
        out = [0] * self.n
        for k, v in enumerate(self.sa, start=1):
            out[v - 1] = k
        return out

    def _lcs(self, p: int, q: int) -> int:
        s = self.s
        m = 0
        while m < p and m < q and s[p - 1 - m] == s[q - 1 - m]:
            m += 1
        return m

    @cached_property
    def lcp(self) -> list[int]:
        ps = self.prefix_lengths
        return [-1] + [self._lcs(ps[k - 1], ps[k]) for k in range(1, self.n)]

    @cached_property
    def bwt(self) -> list[int]:
        """The character following each prefix: ``T[p + 1]``."""
        return [self.s[p] for p in self.prefix_lengths]

    @cached_property
    def catalog(self) -> RightMaximalCatalog:
        return right_maximal_catalog(self.s)

    def b(self, x: int) -> int:
        return naive_b(self.lcp, x)

    def e(self, x: int) -> int:
        return naive_e(self.lcp, x)

    def w(self, x: int) -> int:
        """Weight of index x.

        The longest common suffix of ``T[1..p_x]`` with an adjacent prefix
        (colex neighbour x - 1 or x + 1) that is followed by a different
        character; -1 when neither neighbour qualifies.
        """
        ps = self.prefix_lengths
        p = ps[x - 1]
        c = self.s[p]
        best = -1
        for y in (x - 1, x + 1):
            if 1 <= y <= self.n:
                q = ps[y - 1]
                if self.s[q] != c:
                    best = max(best, self._lcs(p, q))
        return best

    @cached_property
    def weights(self) -> list[int]:
        return [self.w(x) for x in range(1, self.n + 1)]

    def max_right_maximal_suffix(self, x: int) -> int:
        """Length of the longest right-maximal suffix of ``T[1..p_x]``."""
        p = self.prefix_lengths[x - 1]
        rm = self.catalog.right_maximal
        for length in range(min(p, self.catalog.max_length), -1, -1):
            if self.s[p - length:p] in rm:
                return length
        raise AssertionError("the empty string is always right-maximal")

    def candt(self, c: int, a: int, a_prime: int) -> int:
        """Smallest index in ``[a, a_prime)`` with symbol c and maximum weight >= 0."""
        best_w, best = -1, -1
        for p in range(a, a_prime):
            wp = self.weights[p - 1]
            if self.bwt[p - 1] == c and wp >= 0 and wp > best_w:
                best_w, best = wp, p
        return best

    def start_run_boundaries(self) -> list[int]:
        return [x for x in range(2, self.n + 1) if self.bwt[x - 1] != self.bwt[x - 2]]

    def boundary_candidates(self) -> list[tuple[int, int, int]]:
        """``(x, c, Candt_c(b(x), e(x)))`` for each start-run boundary and both symbols."""
        out = []
        for x in self.start_run_boundaries():
            bx, ex = self.b(x), self.e(x)
            for c in (self.bwt[x - 1], self.bwt[x - 2]):
                out.append((x, c, self.candt(c, bx, ex)))
        return out

    def position(self, index: int) -> int:
        return self.n - self.sa[index - 1] + 1

    def index_of(self, position: int) -> int:
        return self.isa[self.n - position]

    @cached_property
    def full_l(self) -> list[int]:
        found = {self.position(p) for _, _, p in self.boundary_candidates()}
        return sorted(found, key=lambda q: colex_key(self.s, q))

    def ejection_index(self, j: int) -> int:
        """First index after j whose LCP is below w(j), else n + 1."""
        wj = self.weights[j - 1]
        for y in range(j + 1, self.n + 1):
            if self.lcp[y - 1] < wj:
                return y
        return self.n + 1

    def expected_rowlist(self, i: int) -> set[tuple[int, int, int]]:
        """Triples rowList must hold at the start of iteration i (i >= 2)."""
        out = set()
        for j in range(1, i):
            wj = self.weights[j - 1]
            if wj < 0:
                continue
            c = self.bwt[j - 1]
            if wj == self.lcp[j - 1]:
                ok = i - 1 < self.e(j) and self.candt(c, self.b(j), i) == j
            else:
                ok = j + 1 <= self.n and i - 1 < self.e(j + 1) and self.candt(c, self.b(j + 1), i) == j
            if ok:
                out.add((self.position(j), c, wj))
        return out

    def expected_results(self, i: int) -> list[list[int]]:
        """Per-symbol result lists at the start of iteration i.

        A FullL member shows up once the pass has gone past its ejection
        index; within a symbol, members keep candidate-index order.
        """
        groups: list[list[int]] = [[] for _ in range(self.text.sigma)]
        members = sorted(self.full_l, key=self.index_of)
        for q in members:
            j = self.index_of(q)
            if self.ejection_index(j) < i:
                groups[self.s[q - 1]].append(q)
        return groups


def naive_w(t: Text, x: int) -> int:
    return Oracle(t).w(x)


def naive_candt(t: Text, c: int, a: int, a_prime: int) -> int:
    return Oracle(t).candt(c, a, a_prime)


def naive_full_l(t: Text) -> list[int]:
    return Oracle(t).full_l
