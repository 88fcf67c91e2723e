"""Sublist dynamic programming over general lists."""
from __future__ import annotations

import itertools
import math
import random

from tangles import (
    Permutation,
    SwapList,
    apply_list,
    is_feasible,
    loop_list,
    random_list,
    solve_baseline,
    solve_general,
)

from oracles import brute_min_height


def lst(n, mult):
    return SwapList.from_mult(n, mult)


def check_output(report, source):
    """Solver postconditions every feasible report must satisfy."""
    tangle = report.tangle
    assert tangle.swap_list() == source
    ident = Permutation.identity(source.n)
    assert tangle.perms[0] == ident
    assert apply_list(ident, source) == tangle.perms[-1].positions
    height = report.height
    assert 2 * source.length / source.n <= height - 1 <= source.length


def test_loop_family_heights():
    for n, expected in ((4, 8), (5, 11)):
        report = solve_general(loop_list(n))
        assert report.verdict == "feasible"
        assert report.height == expected
        check_output(report, loop_list(n))


def test_consistent_but_unrealizable_pair():
    assert solve_general(lst(3, {(1, 3): 2})).verdict == "infeasible"


def test_repeated_pair_bounces():
    report = solve_general(lst(2, {(1, 2): 2}))
    assert report.height == 3
    assert [p.wires for p in report.tangle.perms] == [(1, 2), (2, 1), (1, 2)]


def test_doubled_triangle():
    doubled = lst(3, {(1, 2): 2, (1, 3): 2, (2, 3): 2})
    report = solve_general(doubled)
    assert report.height == 7 == brute_min_height(doubled)
    check_output(report, doubled)


def test_free_wire_splitting():
    report = solve_general(lst(4, {(1, 2): 1, (3, 4): 1}))
    assert report.height == 2
    report = solve_general(lst(3, {(1, 2): 1}))
    assert report.height == 2
    assert report.tangle.perms[-1].wires == (2, 1, 3)
    assert solve_general(lst(3, {(1, 3): 1})).verdict == "infeasible"
    assert solve_general(SwapList.zero(5)).height == 1


def test_table_size_is_the_sublist_count():
    for source in (loop_list(4), lst(3, {(1, 2): 2, (2, 3): 3})):
        expected = math.prod(c + 1 for _, _, c in source.entries)
        report = solve_general(source)
        # every sublist vector except the empty one is enumerated exactly once
        assert report.states_explored == expected - 1


def test_exhaustive_grid_against_brute_force():
    pairs = [(1, 2), (1, 3), (2, 3)]
    for vec in itertools.product(range(3), repeat=3):
        source = lst(3, dict(zip(pairs, vec)))
        expected = brute_min_height(source)
        report = solve_general(source)
        if expected is None:
            assert report.verdict == "infeasible"
        else:
            assert report.height == expected
            check_output(report, source)


def test_random_instances_against_baseline():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.choice((4, 5))
        total = rng.randrange(3, 9)
        source = random_list(n, total, rng.randrange(10_000))
        report = solve_general(source)
        assert report.verdict == "feasible"
        check_output(report, source)
        assert report.height == solve_baseline(source).height


def test_is_feasible_routes_agree():
    samples = [
        lst(3, {(1, 2): 1, (2, 3): 1, (1, 3): 1}),
        lst(3, {(1, 3): 2}),
        lst(4, {(1, 3): 1, (2, 4): 1}),
        lst(3, {(1, 2): 2, (1, 3): 2, (2, 3): 2}),
        lst(2, {(1, 2): 3}),
        SwapList.zero(4),
        lst(3, {(1, 2): 1, (2, 3): 1}),
    ]
    for source in samples:
        answers = {
            is_feasible(source, method=m) for m in ("auto", "search", "dp")
        }
        assert len(answers) == 1


def test_budget_verdicts():
    big = loop_list(6)
    assert solve_general(big, max_states=10).verdict == "memout"
    assert solve_general(big, time_limit=0.0).verdict == "timeout"
