"""Optimal tangles for simple lists via shortest path over reachable wire orders.

The search graph has one vertex per wire order whose out-of-order pairs all
belong to the input list; an edge performs one layer of swaps using only
pairs that are still in order.  Along any path from the identity each pair
crosses at most once, so a shortest path to the final order is exactly an
optimal tangle.  Vertices are discovered lazily; memory stays bounded by
the reachable set.
"""
from __future__ import annotations

import time
from collections import deque

from .core import (
    Permutation,
    SwapList,
    Tangle,
    nonadjacent_position_sets,
    permutation_after,
)
from .reports import FEASIBLE, INFEASIBLE, MEMOUT, TIMEOUT, SolveReport

_BUDGET_CHECK_EVERY = 256


def solve_simple(
    lst: SwapList,
    *,
    time_limit: float | None = None,
    max_states: int | None = None,
) -> SolveReport:
    """Compute a minimum-height tangle realizing a simple list.

    Raises ValueError for non-simple input.  Inconsistent lists (and only
    those) are unrealizable and get an infeasible verdict without a search.
    """
    if not lst.is_simple:
        raise ValueError("solve_simple requires a simple list")
    start_time = time.perf_counter()
    deadline = start_time + time_limit if time_limit is not None else None

    n = lst.n
    target = permutation_after(Permutation.identity(n), lst)
    if target is None:
        return SolveReport(
            "simple", INFEASIBLE, None, 0, time.perf_counter() - start_time
        )

    wanted = set(lst.pairs())
    start = tuple(range(1, n + 1))
    goal = target.wires
    parent: dict[tuple[int, ...], tuple[int, ...] | None] = {start: None}
    queue: deque[tuple[int, ...]] = deque((start,))
    explored = 0

    found = start == goal
    while queue and not found:
        wires = queue.popleft()
        explored += 1
        if explored % _BUDGET_CHECK_EVERY == 0:
            if deadline is not None and time.perf_counter() > deadline:
                return SolveReport(
                    "simple", TIMEOUT, None, explored, time.perf_counter() - start_time
                )
        mask = 0
        for p in range(n - 1):
            a, b = wires[p], wires[p + 1]
            # A swap is usable while the pair is still in order and listed.
            if a < b and (a, b) in wanted:
                mask |= 1 << p
        for combo in nonadjacent_position_sets(mask):
            new = list(wires)
            for p in combo:
                new[p], new[p + 1] = new[p + 1], new[p]
            state = tuple(new)
            if state in parent:
                continue
            if max_states is not None and len(parent) >= max_states:
                return SolveReport(
                    "simple", MEMOUT, None, explored, time.perf_counter() - start_time
                )
            parent[state] = wires
            if state == goal:
                found = True
                break
            queue.append(state)

    if not found:
        return SolveReport(
            "simple", INFEASIBLE, None, explored, time.perf_counter() - start_time
        )

    chain = [goal]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    tangle = Tangle(tuple(Permutation(w) for w in reversed(chain)))
    return SolveReport(
        "simple", FEASIBLE, tangle, explored, time.perf_counter() - start_time
    )
