"""Reference solver: breadth-first search over (wire order, remaining swaps).

Successor states perform one supported layer drawn from the remaining
multiset; the first state with nothing remaining gives the optimal height.
With deduplication enabled (the default) each state is expanded once and
the search doubles as an exact feasibility test: an exhausted queue proves
no realization exists.  With deduplication disabled, the search degenerates
to the plain layer-by-layer tree whose growth the benchmark harness plots.

Budgets degrade gracefully: running out of time or state allowance yields a
distinct verdict instead of an answer.
"""
from __future__ import annotations

import time
from collections import deque

from .core import Permutation, SwapList, Tangle, nonadjacent_position_sets
from .reports import FEASIBLE, INFEASIBLE, MEMOUT, TIMEOUT, SolveReport

_BUDGET_CHECK_EVERY = 128

_State = tuple[tuple[int, ...], tuple[int, ...]]


def solve_baseline(
    lst: SwapList,
    *,
    dedupe: bool = True,
    time_limit: float | None = None,
    max_states: int | None = None,
) -> SolveReport:
    """Solve by plain state-space search from (identity, whole list).

    ``states_explored`` counts expanded states; with deduplication off it
    grows like the underlying search tree.
    """
    start_time = time.perf_counter()
    deadline = start_time + time_limit if time_limit is not None else None
    algorithm = "baseline" if dedupe else "baseline-nodedup"

    n = lst.n
    pairs = [(i, j) for i, j, _ in lst.entries]
    pair_index = {pair: k for k, pair in enumerate(pairs)}
    start: _State = (tuple(range(1, n + 1)), tuple(c for _, _, c in lst.entries))
    goal_rem = (0,) * len(pairs)
    explored = 0

    def report(verdict: str, tangle: Tangle | None) -> SolveReport:
        return SolveReport(
            algorithm, verdict, tangle, explored, time.perf_counter() - start_time
        )

    if start[1] == goal_rem:
        return report(FEASIBLE, Tangle((Permutation.identity(n),)))

    parent: dict[_State, _State | None] = {start: None}
    # Without deduplication the tree is tracked through per-node parent links:
    # each queue item is (state, parent_item).
    queue: deque = deque()
    if dedupe:
        queue.append(start)
    else:
        queue.append((start, None))

    goal_state: _State | None = None
    goal_node = None
    while queue and goal_state is None:
        if dedupe:
            state = queue.popleft()
            wires, rem = state
        else:
            node = queue.popleft()
            (wires, rem), _ = node
        explored += 1
        if explored % _BUDGET_CHECK_EVERY == 0:
            if deadline is not None and time.perf_counter() > deadline:
                return report(TIMEOUT, None)
            if max_states is not None and explored > max_states:
                return report(MEMOUT, None)

        mask = 0
        keys = [0] * (n - 1)
        for p in range(n - 1):
            a, b = wires[p], wires[p + 1]
            k = pair_index.get((a, b) if a < b else (b, a))
            if k is not None and rem[k] > 0:
                mask |= 1 << p
                keys[p] = k

        for combo in nonadjacent_position_sets(mask):
            new_wires = list(wires)
            new_rem = list(rem)
            for p in combo:
                new_wires[p], new_wires[p + 1] = new_wires[p + 1], new_wires[p]
                new_rem[keys[p]] -= 1
            succ: _State = (tuple(new_wires), tuple(new_rem))
            if dedupe:
                if succ in parent:
                    continue
                parent[succ] = state
                if succ[1] == goal_rem:
                    goal_state = succ
                    break
                queue.append(succ)
            else:
                child = (succ, node)
                if succ[1] == goal_rem:
                    goal_state = succ
                    goal_node = child
                    break
                queue.append(child)

    if goal_state is None:
        return report(INFEASIBLE, None)

    chain = []
    if dedupe:
        cursor: _State | None = goal_state
        while cursor is not None:
            chain.append(cursor[0])
            cursor = parent[cursor]
    else:
        while goal_node is not None:
            chain.append(goal_node[0][0])
            goal_node = goal_node[1]
    tangle = Tangle(tuple(Permutation(w) for w in reversed(chain)))
    return report(FEASIBLE, tangle)
