"""Optimal tangles for general lists: dynamic programming over all sublists.

Every sublist of the input is visited in non-decreasing length order.  A
consistent sublist of positive length is realizable exactly when removing
some layer supported by its final wire order leaves a realizable shorter
sublist; the minimum over those predecessors gives its optimal height.
The table therefore holds one entry per realizable sublist, at most
``prod(multiplicity + 1)`` entries overall.

Wires that never swap split the input into independent bands first; the
bands' tangles run side by side, so the full height is their maximum.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .core import (
    Block,
    Involution,
    Permutation,
    SwapList,
    Tangle,
    is_consistent,
    nonadjacent_position_sets,
    split_free_wires,
)
from .reports import FEASIBLE, INFEASIBLE, MEMOUT, TIMEOUT, SolveReport

_BUDGET_CHECK_EVERY = 1024


class _BudgetExceeded(Exception):
    def __init__(self, verdict: str, explored: int) -> None:
        self.verdict = verdict
        self.explored = explored


@dataclass
class _Budget:
    deadline: float | None
    max_states: int | None
    explored: int = 0

    def spend(self, amount: int = 1) -> None:
        self.explored += amount
        if self.max_states is not None and self.explored > self.max_states:
            raise _BudgetExceeded(MEMOUT, self.explored)
        if (
            self.deadline is not None
            and self.explored % _BUDGET_CHECK_EVERY < amount
            and time.perf_counter() > self.deadline
        ):
            raise _BudgetExceeded(TIMEOUT, self.explored)


def _vectors_of_sum(caps: tuple[int, ...], total: int):
    """All count vectors bounded by ``caps`` with the given sum, lexicographic."""
    m = len(caps)
    suffix = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        suffix[k] = suffix[k + 1] + caps[k]
    vec = [0] * m

    def fill(k: int, remaining: int):
        if k == m:
            if remaining == 0:
                yield tuple(vec)
            return
        if remaining > suffix[k]:
            return
        lo = max(0, remaining - suffix[k + 1])
        hi = min(caps[k], remaining)
        for value in range(lo, hi + 1):
            vec[k] = value
            yield from fill(k + 1, remaining - value)
        vec[k] = 0

    yield from fill(0, total)


def _final_order(n: int, pairs: list[tuple[int, int]], vec: tuple[int, ...]) -> tuple[int, ...] | None:
    """Wire order after performing ``vec`` from the identity, or None."""
    final = list(range(1, n + 1))
    for k, (i, j) in enumerate(pairs):
        if vec[k] % 2:
            final[i - 1] += 1
            final[j - 1] -= 1
    wires = [0] * n
    for w in range(1, n + 1):
        p = final[w - 1]
        if p < 1 or p > n or wires[p - 1]:
            return None
        wires[p - 1] = w
    return tuple(wires)


def _solve_block(swaps: SwapList, budget: _Budget) -> Tangle | None:
    """DP over all sublists of one band; None when the band is unrealizable."""
    n = swaps.n
    if swaps.is_zero:
        return Tangle((Permutation.identity(n),))
    pairs = [(i, j) for i, j, _ in swaps.entries]
    caps = tuple(c for _, _, c in swaps.entries)
    pair_index = {pair: k for k, pair in enumerate(pairs)}
    m = len(pairs)
    total = swaps.length

    empty = (0,) * m
    table: dict[tuple[int, ...], tuple[int, tuple[int, ...] | None]] = {empty: (1, None)}

    for length in range(1, total + 1):
        for vec in _vectors_of_sum(caps, length):
            budget.spend()
            order = _final_order(n, pairs, vec)
            if order is None:
                continue
            mask = 0
            keys = [0] * (n - 1)
            for p in range(n - 1):
                a, b = order[p], order[p + 1]
                k = pair_index.get((a, b) if a < b else (b, a))
                if k is not None and vec[k] > 0:
                    mask |= 1 << p
                    keys[p] = k
            best: tuple[int, tuple[int, ...]] | None = None
            for combo in nonadjacent_position_sets(mask):
                pred = list(vec)
                for p in combo:
                    pred[keys[p]] -= 1
                entry = table.get(tuple(pred))
                if entry is not None and (best is None or entry[0] + 1 < best[0]):
                    best = (entry[0] + 1, tuple(pred))
            if best is not None:
                table[vec] = best

    full = caps
    if full not in table:
        return None
    chain = [full]
    while True:
        pred = table[chain[-1]][1]
        if pred is None:
            break
        chain.append(pred)
    perms = []
    for vec in reversed(chain):
        order = _final_order(n, pairs, vec)
        assert order is not None
        perms.append(Permutation(order))
    return Tangle(tuple(perms))


def _merge_blocks(n: int, blocks: tuple[Block, ...], tangles: list[Tangle]) -> Tangle:
    """Run per-band tangles side by side over the full wire range."""
    height = max(t.height for t in tangles)
    perms = [Permutation.identity(n)]
    current = list(range(1, n + 1))
    for step in range(1, height):
        pairs = []
        for block, tangle in zip(blocks, tangles):
            if step < tangle.height:
                layer = tangle.layers[step - 1]
                for i, j in layer.swaps:
                    a, b = block.wires[i - 1], block.wires[j - 1]
                    pairs.append((a, b) if a < b else (b, a))
        eps = Involution(n, tuple(sorted(pairs)))
        pos = {w: p for p, w in enumerate(current)}
        for i, j in eps.swaps:
            pi, pj = pos[i], pos[j]
            current[pi], current[pj] = current[pj], current[pi]
            pos[i], pos[j] = pj, pi
        perms.append(Permutation(tuple(current)))
    return Tangle(tuple(perms))


def solve_general(
    lst: SwapList,
    *,
    time_limit: float | None = None,
    max_states: int | None = None,
) -> SolveReport:
    """Compute a minimum-height tangle realizing any list, or decide infeasibility.

    ``states_explored`` counts enumerated sublist vectors across all bands.
    """
    start_time = time.perf_counter()
    budget = _Budget(
        deadline=start_time + time_limit if time_limit is not None else None,
        max_states=max_states,
    )

    def report(verdict: str, tangle: Tangle | None) -> SolveReport:
        return SolveReport(
            "general", verdict, tangle, budget.explored, time.perf_counter() - start_time
        )

    if not is_consistent(Permutation.identity(lst.n), lst):
        return report(INFEASIBLE, None)
    blocks = split_free_wires(lst)
    if blocks is None:
        return report(INFEASIBLE, None)

    tangles = []
    try:
        for block in blocks:
            tangle = _solve_block(block.swaps, budget)
            if tangle is None:
                return report(INFEASIBLE, None)
            tangles.append(tangle)
    except _BudgetExceeded as exceeded:
        return report(exceeded.verdict, None)

    return report(FEASIBLE, _merge_blocks(lst.n, blocks, tangles))


def _search_block(swaps: SwapList) -> bool:
    """Depth-first reachability over (order, remaining) with failure memoing.

    Decides realizability of one band exactly: a band is realizable iff some
    sequence of supported layers consumes the whole multiset.  States reached
    from the identity are keyed by the remaining counts alone (the wire order
    is a function of the swaps already performed).  Layers are tried largest
    first, which tends to walk straight to a realization when one exists.
    """
    n = swaps.n
    pairs = [(i, j) for i, j, _ in swaps.entries]
    pair_index = {pair: k for k, pair in enumerate(pairs)}
    start = tuple(c for _, _, c in swaps.entries)
    failed: set[tuple[int, ...]] = set()

    def dfs(order: tuple[int, ...], rem: tuple[int, ...]) -> bool:
        if not any(rem):
            return True
        if rem in failed:
            return False
        mask = 0
        keys = [0] * (n - 1)
        for p in range(n - 1):
            a, b = order[p], order[p + 1]
            k = pair_index.get((a, b) if a < b else (b, a))
            if k is not None and rem[k] > 0:
                mask |= 1 << p
                keys[p] = k
        combos = sorted(nonadjacent_position_sets(mask), key=len, reverse=True)
        for combo in combos:
            new_rem = list(rem)
            new_order = list(order)
            for p in combo:
                new_rem[keys[p]] -= 1
                new_order[p], new_order[p + 1] = new_order[p + 1], new_order[p]
            if dfs(tuple(new_order), tuple(new_rem)):
                return True
        failed.add(rem)
        return False

    return dfs(tuple(range(1, n + 1)), start)


def is_feasible(lst: SwapList, *, method: str = "auto") -> bool:
    """Decide whether some tangle realizes the list.

    ``method="auto"`` applies the structural shortcuts first: simple and odd
    lists are realizable exactly when consistent.  ``method="search"`` skips
    the shortcuts and decides by exhausting the reachable state space, and
    ``method="dp"`` runs the full sublist table.  All three agree; they only
    trade speed.
    """
    if method not in ("auto", "search", "dp"):
        raise ValueError(f"unknown method {method!r}")
    if method == "dp":
        return solve_general(lst).verdict == FEASIBLE
    if not is_consistent(Permutation.identity(lst.n), lst):
        return False
    if method == "auto" and (lst.is_simple or lst.is_odd):
        return True
    blocks = split_free_wires(lst)
    if blocks is None:
        return False
    return all(_search_block(b.swaps) for b in blocks if not b.swaps.is_zero)
