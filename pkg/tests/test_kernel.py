import pytest
from hypothesis import given, settings, strategies as st

from helpers import TABLE
from suffixient.errors import ContractViolation
from suffixient.kernel import MonotoneStack, compute_b, compute_w, stack_init
from suffixient.oracle import naive_b

LCP = TABLE["LCP"]


@pytest.mark.parametrize(
    "args, expected",
    [
        ((-1, 1, 3, -1, 0), 0),   # i = 1: A then G
        ((3, 3, 2, 1, 2), 2),     # i = 3
        ((1, 1, 1, 1, 3), -1),    # i = 7: inside a run
        ((2, 2, -1, 2, -1), -1),  # i = n, same as predecessor
        ((1, 2, -1, 2, -1), 2),   # i = n, new run
    ],
)
def test_compute_w(args, expected):
    assert compute_w(*args) == expected


def test_compute_b_worked_example():
    stack = stack_init()
    got = {i: compute_b(stack, LCP[i - 1], i) for i in range(2, 11)}
    assert got[5] == 4
    assert got[9] == 1
    assert got == {i: naive_b(LCP, i) for i in range(2, 11)}


def test_repeat_query_is_cached():
    stack = MonotoneStack()
    assert stack.compute_b(LCP[1], 2) == 1
    depth, pushes = len(stack), stack.pushes
    assert stack.compute_b(123, 2) == 1
    assert (len(stack), stack.pushes, stack.repeat_hits) == (depth, pushes, 1)


def test_going_backwards_is_a_contract_violation():
    stack = MonotoneStack()
    stack.compute_b(0, 2)
    stack.compute_b(1, 3)
    with pytest.raises(ContractViolation):
        stack.compute_b(0, 2)


def test_bottom_sentinel_cannot_be_popped():
    stack = MonotoneStack()
    with pytest.raises(ContractViolation):
        stack.compute_b(-1, 2)


@settings(max_examples=300)
@given(st.lists(st.integers(0, 12), min_size=1, max_size=80))
def test_stack_matches_naive_scan(tail):
    lcp = [-1] + tail
    stack = MonotoneStack()
    for i in range(2, len(lcp) + 1):
        assert stack.compute_b(lcp[i - 1], i) == naive_b(lcp, i)
        vals = [t.val for t in stack.tuples]
        assert all(a < b for a, b in zip(vals, vals[1:]))
    assert stack.pushes <= len(lcp)
    assert stack.pops <= stack.pushes - 1
