"""Feasibility oracles for structured lists, and the even-list conjecture tooling.

Simple lists are realizable exactly when consistent, and odd lists reduce to
the same test.  For even lists no characterization is proven; the working
conjecture is that non-separability suffices, so verdicts derived from it
are explicitly tagged ``conjecture`` and a decisive solver fallback exists.
``verify_even_conjecture`` exhaustively tests the conjecture at small order.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (
    Permutation,
    SwapList,
    Tangle,
    is_consistent,
    permutation_after,
)
from .reports import FEASIBLE
from .solver_general import is_feasible, solve_general


@dataclass(frozen=True)
class FeasibilityVerdict:
    """A feasibility answer plus the rule that produced it.

    ``method`` is one of ``simple-consistency``, ``odd-consistency``,
    ``conjecture``, ``solver`` or ``exhausted``.  Verdicts tagged
    ``conjecture`` are not proven; everything else is decisive.  When a
    witness is attached it realizes the queried list exactly.
    """

    feasible: bool
    method: str
    witness: Tangle | None = None


def feasible_simple(lst: SwapList, *, witness: bool = False) -> FeasibilityVerdict:
    """Decide a simple list by its consistency alone; no search is run.

    With ``witness=True`` a realization of height at most n+1 is attached,
    built by the sorting-network construction of :func:`connecting_tangle`.
    """
    if not lst.is_simple:
        raise ValueError("feasible_simple requires a simple list")
    start = Permutation.identity(lst.n)
    goal = permutation_after(start, lst)
    if goal is None:
        return FeasibilityVerdict(False, "simple-consistency")
    tangle = connecting_tangle(start, goal) if witness else None
    return FeasibilityVerdict(True, "simple-consistency", tangle)


def feasible_odd(lst: SwapList) -> FeasibilityVerdict:
    """Decide an odd list (every non-zero multiplicity odd) by consistency.

    Parity is all that determines the final wire order, and for odd lists
    realizability survives the reduction to the underlying simple list, so
    the consistency test is decisive at every order.
    """
    if not lst.is_odd:
        raise ValueError("feasible_odd requires an odd list")
    verdict = is_consistent(Permutation.identity(lst.n), lst)
    return FeasibilityVerdict(verdict, "odd-consistency")


def odd_equivalences_agree(lst: SwapList) -> bool:
    """Evaluate the eight equivalent feasibility statements for an odd list.

    Feasibility of the list, of its parity reduction, and of both restricted
    to every wire triple is decided by the exact solver; the four matching
    consistency statements are evaluated directly.  Returns True when all
    eight answers coincide.  Intended for test harness use at small order.
    """
    if not lst.is_odd:
        raise ValueError("odd_equivalences_agree requires an odd list")
    n = lst.n
    if n < 3:
        raise ValueError("requires at least 3 wires")
    ident = Permutation.identity(n)
    reduced = lst.parity_reduce()
    triples = list(itertools.combinations(range(1, n + 1), 3))

    statements = [
        solve_general(lst).verdict == FEASIBLE,
        solve_general(reduced).verdict == FEASIBLE,
        all(solve_general(lst.restrict(a)).verdict == FEASIBLE for a in triples),
        all(
            solve_general(lst.restrict(a).parity_reduce()).verdict == FEASIBLE
            for a in triples
        ),
        is_consistent(ident, lst),
        is_consistent(ident, reduced),
        all(is_consistent(Permutation.identity(3), lst.restrict(a)) for a in triples),
        all(
            is_consistent(Permutation.identity(3), lst.restrict(a).parity_reduce())
            for a in triples
        ),
    ]
    return len(set(statements)) == 1


def feasible_even(lst: SwapList, *, decisive: bool = False) -> FeasibilityVerdict:
    """Feasibility of an even list.

    By default answers with the unproven rule "non-separable implies
    feasible" and tags the verdict ``conjecture``.  With ``decisive=True``
    the exact solver settles the question and attaches a witness when one
    exists.
    """
    if not lst.is_even:
        raise ValueError("feasible_even requires an even list")
    if not decisive:
        return FeasibilityVerdict(lst.is_non_separable(), "conjecture")
    report = solve_general(lst)
    if report.verdict == FEASIBLE:
        return FeasibilityVerdict(True, "solver", report.tangle)
    return FeasibilityVerdict(False, "exhausted")


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of an exhaustive even-list conjecture sweep."""

    n: int
    entry_bound: int
    lists_enumerated: int
    non_separable: int
    feasible: int
    counterexamples: tuple[SwapList, ...]
    elapsed_seconds: float

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def _conjecture_shard(
    n: int, entry_bound: int, start: int, stop: int
) -> tuple[int, int, int, list[tuple[tuple[int, int, int], ...]]]:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    values = range(0, entry_bound + 1, 2)
    sweep = itertools.islice(
        itertools.product(values, repeat=len(pairs)), start, stop
    )
    enumerated = 0
    non_separable = 0
    feasible_count = 0
    counterexamples = []
    for vec in sweep:
        enumerated += 1
        lst = SwapList(
            n, tuple((i, j, c) for (i, j), c in zip(pairs, vec) if c)
        )
        if not lst.is_non_separable():
            continue
        non_separable += 1
        if is_feasible(lst, method="search"):
            feasible_count += 1
        else:
            counterexamples.append(lst.entries)
    return enumerated, non_separable, feasible_count, counterexamples


def verify_even_conjecture(
    n: int, entry_bound: int = 2, *, workers: int = 1
) -> ConjectureReport:
    """Test every even list of order n with entries up to ``entry_bound``.

    Each non-separable list is checked for realizability by exhaustive
    search; any failure is collected as a counterexample.  Capping entries
    at 2 already covers the conjecture in full, since any even list and its
    cap reduction stand or fall together under it.  The enumeration is
    partitioned across ``workers`` processes; each list's check is
    independent.
    """
    if n < 3:
        raise ValueError("requires at least 3 wires")
    if entry_bound < 0 or entry_bound % 2:
        raise ValueError("entry bound must be a non-negative even integer")
    started = time.perf_counter()
    num_pairs = n * (n - 1) // 2
    total = (entry_bound // 2 + 1) ** num_pairs

    if workers <= 1:
        shards = [_conjecture_shard(n, entry_bound, 0, total)]
    else:
        chunk = -(-total // workers)
        bounds = [(k * chunk, min((k + 1) * chunk, total)) for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shards = list(
                pool.map(
                    _conjecture_shard,
                    itertools.repeat(n),
                    itertools.repeat(entry_bound),
                    (b[0] for b in bounds),
                    (b[1] for b in bounds),
                )
            )

    enumerated = sum(s[0] for s in shards)
    non_separable = sum(s[1] for s in shards)
    feasible_count = sum(s[2] for s in shards)
    counterexamples = tuple(
        SwapList(n, entries) for s in shards for entries in s[3]
    )
    return ConjectureReport(
        n=n,
        entry_bound=entry_bound,
        lists_enumerated=enumerated,
        non_separable=non_separable,
        feasible=feasible_count,
        counterexamples=counterexamples,
        elapsed_seconds=time.perf_counter() - started,
    )


def check_rich_even_list(lst: SwapList) -> bool:
    """Feasibility of an even non-separable list whose entries all reach n.

    Such lists are always realizable; this check validates the statement on
    a concrete instance by running the exact search.  Inputs violating the
    hypothesis are rejected.
    """
    if not lst.is_even:
        raise ValueError("requires an even list")
    if not lst.is_non_separable():
        raise ValueError("requires a non-separable list")
    if any(c < lst.n for _, _, c in lst.entries):
        raise ValueError("requires every non-zero multiplicity to reach the wire count")
    return is_feasible(lst, method="search")


def minimize_even_list(lst: SwapList) -> SwapList:
    """Strip swap pairs from a feasible even list while it stays feasible.

    Repeatedly lowers some multiplicity by 2 (never to zero) as long as
    the result remains realizable, scanning pairs in canonical order and
    restarting after every hit.  The fixed point is a minimal feasible even
    list.
    """
    if not lst.is_even:
        raise ValueError("minimize_even_list requires an even list")
    if not is_feasible(lst):
        raise ValueError("minimize_even_list requires a feasible list")
    current = lst
    changed = True
    while changed:
        changed = False
        for i, j, c in current.entries:
            if c < 4:
                continue
            candidate = current.with_multiplicity(i, j, c - 2)
            if is_feasible(candidate):
                current = candidate
                changed = True
                break
    return current


def connecting_tangle(start: Permutation, goal: Permutation) -> Tangle:
    """A tangle of height at most n+1 from ``start`` to ``goal`` crossing
    each wire pair at most once.

    Runs n rounds of the odd-even transposition network, swapping a
    neighboring pair exactly when it is out of order relative to ``goal``;
    rounds performing no swap are dropped.
    """
    if start.n != goal.n:
        raise ValueError("permutations have different wire counts")
    n = start.n
    rank = goal.positions
    current = list(start.wires)
    perms = [start]
    for round_index in range(n):
        swapped = False
        for p in range(round_index % 2, n - 1, 2):
            a, b = current[p], current[p + 1]
            if rank[a - 1] > rank[b - 1]:
                current[p], current[p + 1] = b, a
                swapped = True
        if swapped:
            perms.append(Permutation(tuple(current)))
    if tuple(current) != goal.wires:
        raise AssertionError("odd-even rounds failed to reach the goal order")
    return Tangle(tuple(perms))
