"""One-pass construction of a suffixient array from a triple stream.

The builder keeps three small structures while it walks the columns of
(SA, LCP, BWT) of the reversed text:

* ``RowList``: candidate triples (text position, symbol, weight) ordered by
  non-increasing weight, at most one per symbol, with a per-symbol pointer;
* ``prev_w``: for each symbol, the last index with non-negative weight;
* a monotone stack answering b(i).

A candidate is ejected into ``results[symbol]`` as soon as the streamed LCP
drops below its weight; whatever survives the pass is flushed at the end.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Callable, NamedTuple, Optional

from .errors import ContractViolation
from .kernel import MonotoneStack, compute_w
from .stream import IndexTriple, TripleStream


class RowTriple(NamedTuple):
    p_text: int
    char: int
    weight: int


class PrevW(NamedTuple):
    index: int
    weight: int


class _Node:
    __slots__ = ("triple", "prev", "next")

    def __init__(self, triple: RowTriple):
        self.triple = triple
        self.prev: Optional[_Node] = None
        self.next: Optional[_Node] = None


class RowList:
    """Doubly-linked candidate list plus the per-symbol ``map`` of nodes."""

    def __init__(self, sigma: int):
        self.sigma = sigma
        self.head: Optional[_Node] = None
        self.tail: Optional[_Node] = None
        self.map: list[Optional[_Node]] = [None] * sigma
        self.size = 0

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        node = self.head
        while node is not None:
            yield node.triple
            node = node.next

    def front(self) -> Optional[RowTriple]:
        return None if self.head is None else self.head.triple

    def prepend(self, triple: RowTriple) -> None:
        node = _Node(triple)
        node.next = self.head
        if self.head is not None:
            self.head.prev = node
        else:
            self.tail = node
        self.head = node
        self.map[triple.char] = node
        self.size += 1

    def remove(self, node: _Node) -> None:
        if node.prev is not None:
            node.prev.next = node.next
        else:
            self.head = node.next
        if node.next is not None:
            node.next.prev = node.prev
        else:
            self.tail = node.prev
        node.prev = node.next = None
        self.map[node.triple.char] = None
        self.size -= 1

    def pop_front(self) -> RowTriple:
        node = self.head
        self.remove(node)
        return node.triple

    def snapshot(self) -> tuple[RowTriple, ...]:
        return tuple(self)

    def check(self) -> None:
        """Raise ContractViolation unless weights are sorted and ``map`` is exact."""
        seen = set()
        last = None
        count = 0
        node = self.head
        while node is not None:
            t = node.triple
            if last is not None and t.weight > last:
                raise ContractViolation(f"rowList weights increase at {t}")
            if t.char in seen:
                raise ContractViolation(f"two triples for symbol {t.char}")
            if self.map[t.char] is not node:
                raise ContractViolation(f"map[{t.char}] does not point at {t}")
            seen.add(t.char)
            last = t.weight
            count += 1
            node = node.next
        if count != self.size or count > self.sigma:
            raise ContractViolation(f"rowList size {count} (recorded {self.size}, sigma {self.sigma})")
        for c, node in enumerate(self.map):
            if node is not None and c not in seen:
                raise ContractViolation(f"map[{c}] points outside rowList")


@dataclass
class RunStats:
    n: int
    sigma: int
    chi: int = 0
    stack_pushes: int = 0
    stack_pops: int = 0
    stack_max_depth: int = 0
    rowlist_insertions: int = 0
    rowlist_ejections: int = 0
    rowlist_replacements: int = 0
    rowlist_max_size: int = 0
    wall_time_ms: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SuffixientArray:
    """Output positions (1-based) grouped by symbol rank, in colex order."""

    groups: tuple[tuple[int, ...], ...]
    n: int
    sigma: int

    @property
    def positions(self) -> list[int]:
        return [p for g in self.groups for p in g]

    @property
    def chi(self) -> int:
        return sum(len(g) for g in self.groups)

    def __len__(self) -> int:
        return self.chi

    def __iter__(self):
        return iter(self.positions)


class BuildResult(NamedTuple):
    array: SuffixientArray
    stats: RunStats


class StepRecord(NamedTuple):
    w: int
    b_i: int
    b_cached: bool
    curr_b: int
    verdict: Optional[bool]


class IterationRecord(NamedTuple):
    """State after iteration ``i`` (``i = n + 1`` denotes the final flush)."""

    i: int
    triple: Optional[IndexTriple]
    step: Optional[StepRecord]
    ejected: tuple[tuple[int, int], ...]
    rows: tuple[RowTriple, ...]
    results: tuple[tuple[int, ...], ...]
    prev_w: tuple[PrevW, ...]


class BuilderState:
    def __init__(self, n: int, sigma: int, check: bool = False):
        self.n = n
        self.sigma = sigma
        self.check = check
        self.rows = RowList(sigma)
        self.prev_w = [PrevW(0, -1)] * sigma
        self.results: list[list[int]] = [[] for _ in range(sigma)]
        self.stack = MonotoneStack()
        self.prev_bwt = -1
        self.insertions = 0
        self.ejections = 0
        self.replacements = 0
        self.max_rows = 0

    def _insert(self, triple: RowTriple) -> None:
        self.rows.prepend(triple)
        self.insertions += 1
        if self.rows.size > self.max_rows:
            self.max_rows = self.rows.size

    def _verify(self) -> None:
        if self.check:
            self.rows.check()


def step0(first: IndexTriple, second: IndexTriple, state: BuilderState) -> StepRecord:
    """Iteration 1: keep column 1 as a candidate iff BWT[2] != BWT[1]."""
    w = compute_w(-1, first.bwt, second.bwt, first.lcp, second.lcp)
    verdict = None
    if second.bwt != first.bwt:
        state._insert(RowTriple(state.n - first.sa + 1, first.bwt, w))
        verdict = True
    if w > -1:
        state.prev_w[first.bwt] = PrevW(1, w)
    state.prev_bwt = first.bwt
    state._verify()
    return StepRecord(w, 1, False, 1, verdict)


def step1_eject(lcp_i: int, state: BuilderState) -> list[tuple[int, int]]:
    """Eject every front triple heavier than ``lcp_i`` into its result list."""
    rows = state.rows
    ejected = []
    while rows.head is not None and lcp_i < rows.head.triple.weight:
        t = rows.pop_front()
        state.results[t.char].append(t.p_text)
        state.ejections += 1
        ejected.append((t.p_text, t.char))
    state._verify()
    return ejected


def candidate_test(w_i: int, lcp_i: int, curr_b: int, prev: PrevW) -> bool:
    """Constant-time check that column i is the best candidate for its symbol
    over ``[curr_b, i + 1)``; the caller guarantees ``w_i > -1``."""
    return w_i > lcp_i or (w_i > -1 and prev.index < curr_b) or prev.weight < w_i


def step2_insert(i: int, triple: IndexTriple, nxt: IndexTriple, state: BuilderState) -> StepRecord:
    stack = state.stack
    w = compute_w(state.prev_bwt, triple.bwt, nxt.bwt, triple.lcp, nxt.lcp)
    hits = stack.repeat_hits
    b_i = stack.compute_b(triple.lcp, i)
    b_cached = stack.repeat_hits != hits
    curr_b = b_i
    verdict = None
    if w > -1:
        if w != triple.lcp:
            curr_b = stack.compute_b(nxt.lcp, i + 1)
        c = triple.bwt
        verdict = candidate_test(w, triple.lcp, curr_b, state.prev_w[c])
        if verdict:
            old = state.rows.map[c]
            if old is not None:
                state.rows.remove(old)
                state.replacements += 1
            state._insert(RowTriple(state.n - triple.sa + 1, c, w))
        state.prev_w[c] = PrevW(i, w)
    state.prev_bwt = triple.bwt
    state._verify()
    return StepRecord(w, b_i, b_cached, curr_b, verdict)


def finalize(state: BuilderState) -> SuffixientArray:
    rows = state.rows
    while rows.head is not None:
        t = rows.pop_front()
        state.results[t.char].append(t.p_text)
        state.ejections += 1
    out = SuffixientArray(tuple(tuple(r) for r in state.results), state.n, state.sigma)
    if state.check:
        if state.n not in out.positions:
            raise ContractViolation(f"position n={state.n} missing from output")
        if out.chi < state.sigma:
            raise ContractViolation(f"chi={out.chi} < sigma={state.sigma}")
    return out


def _record(i, triple, step, ejected, state) -> IterationRecord:
    return IterationRecord(
        i,
        triple,
        step,
        tuple(ejected),
        state.rows.snapshot(),
        tuple(tuple(r) for r in state.results),
        tuple(state.prev_w),
    )


def build_suffixient(
    stream: TripleStream,
    *,
    check: bool = False,
    observer: Optional[Callable[[IterationRecord], None]] = None,
) -> BuildResult:
    """Run the full pass: step 0, then steps 1 and 2 for i = 2..n, then flush.

    ``check`` turns on the structural assertions after every step;
    ``observer`` receives an :class:`IterationRecord` after each iteration.
    """
    start = time.perf_counter()
    n = stream.n
    state = BuilderState(n, stream.sigma, check=check)

    first = stream.current()
    step = step0(first, stream.peek_next(), state)
    if observer is not None:
        observer(_record(1, first, step, (), state))
    stream.advance()

    for i in range(2, n + 1):
        triple = stream.current()
        nxt = stream.peek_next()
        ejected = step1_eject(triple.lcp, state)
        step = step2_insert(i, triple, nxt, state)
        if observer is not None:
            observer(_record(i, triple, step, ejected, state))
        stream.advance()

    remaining = [(t.p_text, t.char) for t in state.rows]
    result = finalize(state)
    if observer is not None:
        observer(_record(n + 1, None, None, remaining, state))

    stack = state.stack
    stats = RunStats(
        n=n,
        sigma=state.sigma,
        chi=result.chi,
        stack_pushes=stack.pushes,
        stack_pops=stack.pops,
        stack_max_depth=stack.max_depth,
        rowlist_insertions=state.insertions,
        rowlist_ejections=state.ejections,
        rowlist_replacements=state.replacements,
        rowlist_max_size=state.max_rows,
        wall_time_ms=(time.perf_counter() - start) * 1e3,
    )
    return BuildResult(result, stats)
