"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines live.
"""
from __future__ import annotations

import itertools
import math
import random
import statistics

import pytest

from tangles import (
    Permutation,
    RenderSpec,
    SwapList,
    ThreePartitionInstance,
    apply_list,
    connecting_tangle,
    fibonacci,
    hardness_gadget,
    is_consistent,
    is_feasible,
    loop_list,
    parse_list,
    parse_tangle,
    pseudoline_list,
    random_list,
    render,
    serialize_list,
    serialize_tangle,
    solve_baseline,
    solve_general,
    solve_simple,
    supported_involutions,
)


def lst(n, mult):
    return SwapList.from_mult(n, mult)


def check_realization(tangle, source):
    """The invariants every emitted tangle must satisfy."""
    assert tangle.swap_list() == source
    final = apply_list(tangle.perms[0], source)
    assert final == tangle.perms[-1].positions


@pytest.fixture(scope="module")
def battery():
    """Tangles collected from every solver and the connecting construction."""
    instances = [
        lst(2, {(1, 2): 1}),
        lst(2, {(1, 2): 2}),
        lst(2, {(1, 2): 3}),
        pseudoline_list(3),
        lst(3, {(1, 2): 2, (1, 3): 2, (2, 3): 2}),
        lst(4, {(1, 2): 1, (3, 4): 1}),
        lst(3, {(1, 2): 1}),
        SwapList.zero(4),
        loop_list(4),
        loop_list(5),
        random_list(5, 10, 424242),
        random_list(4, 8, 99),
    ]
    outputs = []
    for source in instances:
        for solver in (solve_general, solve_baseline):
            report = solver(source)
            assert report.verdict == "feasible"
            outputs.append((source, report.tangle))
        if source.is_simple:
            report = solve_simple(source)
            assert report.verdict == "feasible"
            outputs.append((source, report.tangle))
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randrange(2, 8)
        a, b = list(range(1, n + 1)), list(range(1, n + 1))
        rng.shuffle(a)
        rng.shuffle(b)
        tangle = connecting_tangle(Permutation(tuple(a)), Permutation(tuple(b)))
        outputs.append((tangle.swap_list(), tangle))
    return outputs


def test_criterion_01_loop_family_heights():
    for n in (4, 5, 6):
        assert solve_general(loop_list(n)).height == 3 * n - 4
    assert solve_baseline(loop_list(7)).height == 3 * 7 - 4
    print("criterion 01 PASS: loop-family heights are 3n-4 for n=4..7")


def test_criterion_02_canonical_verdicts():
    ident = Permutation.identity(3)
    triangle = pseudoline_list(3)
    assert is_consistent(ident, triangle) and is_feasible(triangle)
    assert not is_consistent(ident, lst(3, {(1, 3): 1}))
    double_skip = lst(3, {(1, 3): 2})
    assert is_consistent(ident, double_skip) and not is_feasible(double_skip)
    assert not is_feasible(lst(4, {(1, 3): 1, (2, 4): 1}))
    chain = lst(3, {(1, 2): 1, (2, 3): 1})
    assert chain.is_non_separable() and not is_feasible(chain)
    print("criterion 02 PASS: canonical example verdicts")


def _simple_lists(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        yield SwapList(n, tuple((i, j, 1) for (i, j), b in zip(pairs, bits) if b))


def test_criterion_03_simple_lists_feasible_iff_consistent():
    checked = 0
    for n in range(1, 6):
        ident = Permutation.identity(n)
        for sample in _simple_lists(n):
            checked += 1
            if is_consistent(ident, sample):
                report = solve_simple(sample)
                assert report.verdict == "feasible"
                assert report.height <= n + 1
            else:
                # independent search proof that no realization exists
                assert solve_baseline(sample).verdict == "infeasible"
    print(f"criterion 03 PASS: feasible iff consistent on {checked} simple lists, "
          "heights within n+1")


def test_criterion_04_oracle_equivalence():
    exhaustive = 0
    for n in range(2, 6):
        ident = Permutation.identity(n)
        for sample in _simple_lists(n):
            if not is_consistent(ident, sample):
                continue
            exhaustive += 1
            h1 = solve_simple(sample).height
            h2 = solve_general(sample).height
            h3 = solve_baseline(sample).height
            assert h1 == h2 == h3
    randomized = 0
    for n in (4, 5):
        for k in range(50):
            total = 4 + (k % 9)
            sample = random_list(n, total, 1000 * n + k)
            assert solve_general(sample).height == solve_baseline(sample).height
            randomized += 1
    assert randomized >= 100
    print(f"criterion 04 PASS: heights agree on {exhaustive} exhaustive simple "
          f"lists and {randomized} random instances")


def test_criterion_05_odd_list_equivalences():
    from tangles import odd_equivalences_agree

    checked = 0
    for n in (3, 4):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for values in itertools.product((0, 1, 3), repeat=len(pairs)):
            sample = lst(n, dict(zip(pairs, values)))
            assert odd_equivalences_agree(sample)
            checked += 1
    assert checked == 27 + 729
    print(f"criterion 05 PASS: eight odd-list statements agree on {checked} lists")


def test_criterion_06_even_conjecture_desk_scale():
    from tangles import verify_even_conjecture

    for n in (3, 4, 5, 6):
        report = verify_even_conjecture(n, 2)
        assert report.lists_enumerated == 2 ** (n * (n - 1) // 2)
        assert report.holds, f"counterexamples at n={n}: {report.counterexamples}"
    print("criterion 06 PASS: zero conjecture counterexamples for n=3..6, bound 2")


def test_criterion_07_final_order_invariant_on_all_outputs(battery):
    for source, tangle in battery:
        check_realization(tangle, source)
    print(f"criterion 07 PASS: final-order invariant on {len(battery)} tangles")


def test_criterion_08_fibonacci_support_count():
    rng = random.Random(14)
    for n in range(1, 11):
        expected = fibonacci(n + 1) - 1
        for _ in range(100):
            wires = list(range(1, n + 1))
            rng.shuffle(wires)
            assert len(supported_involutions(Permutation(tuple(wires)))) == expected
    print("criterion 08 PASS: support counts match F(n+1)-1 for n=1..10")


def test_criterion_09_height_bounds(battery):
    solver_outputs = [(s, t) for s, t in battery if t.perms[0].wires == tuple(
        range(1, t.n + 1))]
    for source, tangle in solver_outputs:
        if source.is_zero:
            assert tangle.height == 1
            continue
        h = tangle.height
        assert 2 * source.length / source.n <= h - 1 <= source.length
    print(f"criterion 09 PASS: height bounds on {len(solver_outputs)} solver outputs")


def test_criterion_10_cap_reduction_not_closed_under_feasibility():
    source = loop_list(7)
    assert solve_baseline(source).verdict == "feasible"
    capped = source.cap_reduce()
    report = solve_baseline(capped)
    assert report.verdict == "infeasible"
    print(f"criterion 10 PASS: loop list feasible, its cap reduction infeasible "
          f"({report.states_explored} states exhausted)")


def _linear_fit(xs, ys):
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    residual = sum((y - (my + slope * (x - mx))) ** 2 for x, y in zip(xs, ys))
    total = sum((y - my) ** 2 for y in ys)
    r2 = 1.0 if total == 0 else 1.0 - residual / total
    return slope, r2


def test_criterion_11_growth_contrast():
    sizes = (9, 13, 17, 21, 25)
    seeds = (11, 12, 13)
    general_medians = {}
    instances = {}
    for total in sizes:
        per_seed = []
        instances[total] = []
        for seed in seeds:
            sample = random_list(5, total, seed)
            instances[total].append(sample)
            per_seed.append(solve_general(sample).elapsed_seconds)
        general_medians[total] = statistics.median(per_seed)

    limit = max(8.0, 15.0 * general_medians[25])
    baseline_medians = {}
    measured_sizes = []
    for total in sizes:
        per_seed = []
        for sample in instances[total]:
            report = solve_baseline(sample, dedupe=False, time_limit=limit)
            elapsed = report.elapsed_seconds
            if report.verdict == "timeout":
                elapsed = max(elapsed, limit)
            else:
                measured_sizes.append(total)
            per_seed.append(elapsed)
        baseline_medians[total] = statistics.median(per_seed)

    # headline ordering at the largest size
    ratio = baseline_medians[25] / general_medians[25]
    assert ratio >= 10.0, f"tree search only {ratio:.1f}x slower at |L|=25"

    # qualitative shape: polynomial-like for the table solver (linear in
    # log-log), exponential-like for the tree (linear in semi-log over the
    # sizes it finished)
    slope_general, r2_general = _linear_fit(
        [math.log(s) for s in sizes],
        [math.log(general_medians[s]) for s in sizes],
    )
    finished = sorted(set(s for s in measured_sizes if measured_sizes.count(s) >= 2))
    slope_tree, r2_tree = _linear_fit(
        list(finished),
        [math.log(baseline_medians[s]) for s in finished],
    )
    assert slope_general > 0 and slope_tree > 0
    assert r2_general > 0.5 and r2_tree > 0.5
    print(
        "criterion 11 PASS: tree search "
        f"{ratio:.0f}x slower at |L|=25; log-log slope {slope_general:.1f} "
        f"(r2 {r2_general:.2f}) vs semi-log slope {slope_tree:.2f} "
        f"(r2 {r2_tree:.2f})"
    )


def test_criterion_12_gadget_structure():
    rng = random.Random(2024)
    checked = 0
    for m in (1, 1, 2, 2, 2):
        values = [rng.randrange(1, 9) for _ in range(3 * m)]
        while sum(values) % m:
            values[-1] += 1
        inst = ThreePartitionInstance(tuple(values))
        gadget = hardness_gadget(inst)
        swaps, roles = gadget.swaps, gadget.roles
        assert swaps.n == 12 * m + 2
        assert is_consistent(Permutation.identity(swaps.n), swaps)
        assert swaps.is_non_separable()
        assert swaps.multiplicity(roles["omega"], roles["omega_prime"]) == 2 * m
        for i, value in enumerate(inst.values, start=1):
            a, ap = roles[f"alpha_{i}"], roles[f"alpha_prime_{i}"]
            assert swaps.multiplicity(a, ap) == 2 * m**3 * value
        assert gadget.height_bound == 2 * m**4 * inst.target + 7 * m**2
        checked += 1
    print(f"criterion 12 PASS: gadget structure on {checked} seeded instances")


def test_criterion_13_round_trips_and_determinism():
    lists = [
        SwapList.zero(3),
        pseudoline_list(4),
        loop_list(7),
        random_list(5, 11, 31337),
    ]
    for sample in lists:
        assert parse_list(serialize_list(sample)) == sample
    tangles = [solve_general(s).tangle for s in lists]
    for tangle in tangles:
        assert parse_tangle(serialize_tangle(tangle)) == tangle
    for tangle in tangles:
        for spec in (RenderSpec(), RenderSpec(format="svg")):
            assert render(tangle, spec).encode() == render(tangle, spec).encode()
    assert random_list(6, 9, 5) == random_list(6, 9, 5)
    assert serialize_list(random_list(6, 9, 5)) == serialize_list(random_list(6, 9, 5))
    rerun = [solve_general(s).tangle for s in lists]
    assert rerun == tangles
    print("criterion 13 PASS: round trips, byte-identical renders and generators")
