"""Benchmark harness: timed solver runs over instance directories, CSV out.

Every (instance, algorithm) pair runs ``repeats`` times under a per-run
wall-clock limit and an approximate memory ceiling; each run becomes one
CSV row, followed by one mean row per pair.  Row order is deterministic:
runs sorted by (n, list size, instance id, algorithm, repeat), then the
mean rows in the same order with ``repeat`` set to ``mean``.  Failures of
one instance never abort the batch.
"""
from __future__ import annotations

import csv
import io
import statistics
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .core import SwapList
from .fileio import parse_list
from .reports import FEASIBLE, SolveReport
from .solver_baseline import solve_baseline
from .solver_general import solve_general
from .solver_simple import solve_simple

Solver = Callable[..., SolveReport]

ALGORITHMS: dict[str, Solver] = {
    "simple": solve_simple,
    "general": solve_general,
    "baseline": solve_baseline,
    "baseline-nodedup": lambda lst, **kw: solve_baseline(lst, dedupe=False, **kw),
}

CSV_FIELDS = (
    "instance_id",
    "n",
    "list_size",
    "algo",
    "verdict",
    "height",
    "elapsed_ms",
    "states_explored",
    "repeat",
)

# Rough per-state footprint of the search solvers (tuples plus hash table
# slots), used to translate a memory ceiling into a state allowance.
_BYTES_PER_STATE_BASE = 200
_BYTES_PER_STATE_PER_WIRE = 40


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    n: int
    list_size: int
    algo: str
    verdict: str
    height: int | None
    elapsed_ms: float
    states_explored: int
    repeat: str

    def __post_init__(self) -> None:
        if (self.height is not None) != (self.verdict == FEASIBLE):
            raise ValueError("height is recorded exactly for feasible runs")


def states_for_memory(mem_limit_mb: float, n: int) -> int:
    """Approximate state allowance for a memory ceiling in megabytes."""
    per_state = _BYTES_PER_STATE_BASE + _BYTES_PER_STATE_PER_WIRE * n
    return max(1, int(mem_limit_mb * 1_000_000 / per_state))


def load_instances(directory: str | Path) -> list[tuple[str, SwapList]]:
    """Parse every file in a directory as a swap list, sorted for benching."""
    out = []
    for path in sorted(Path(directory).iterdir()):
        if not path.is_file():
            continue
        lst = parse_list(path.read_text())
        out.append((path.stem, lst))
    out.sort(key=lambda item: (item[1].n, item[1].length, item[0]))
    return out


def _run_one(
    instance_id: str,
    lst: SwapList,
    algo: str,
    repeat: int,
    time_limit: float | None,
    mem_limit_mb: float | None,
) -> BenchRecord:
    solver = ALGORITHMS[algo]
    max_states = (
        states_for_memory(mem_limit_mb, lst.n) if mem_limit_mb is not None else None
    )
    report = solver(lst, time_limit=time_limit, max_states=max_states)
    return BenchRecord(
        instance_id=instance_id,
        n=lst.n,
        list_size=lst.length,
        algo=algo,
        verdict=report.verdict,
        height=report.height,
        elapsed_ms=report.elapsed_seconds * 1000.0,
        states_explored=report.states_explored,
        repeat=str(repeat),
    )


def run_benchmark(
    instances: Sequence[tuple[str, SwapList]],
    algos: Iterable[str],
    *,
    time_limit: float | None = None,
    mem_limit_mb: float | None = None,
    repeats: int = 1,
    workers: int = 1,
) -> list[BenchRecord]:
    """Run the full grid and return run rows followed by mean rows."""
    algos = list(algos)
    for algo in algos:
        if algo not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algo!r}")
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    ordered = sorted(instances, key=lambda item: (item[1].n, item[1].length, item[0]))
    tasks = [
        (instance_id, lst, algo, repeat, time_limit, mem_limit_mb)
        for instance_id, lst in ordered
        for algo in algos
        for repeat in range(1, repeats + 1)
    ]
    if workers <= 1:
        rows = [_run_one(*task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_one, *zip(*tasks)))
    rows.sort(key=lambda r: (r.n, r.list_size, r.instance_id, r.algo, int(r.repeat)))
    return rows + _mean_rows(rows)


def _mean_rows(rows: Sequence[BenchRecord]) -> list[BenchRecord]:
    groups: dict[tuple, list[BenchRecord]] = {}
    for row in rows:
        groups.setdefault(
            (row.n, row.list_size, row.instance_id, row.algo), []
        ).append(row)
    means = []
    for (n, size, instance_id, algo), members in sorted(groups.items()):
        verdicts = {row.verdict for row in members}
        heights = {row.height for row in members}
        verdict = members[0].verdict if len(verdicts) == 1 else "mixed"
        if verdict == FEASIBLE and len(heights) != 1:
            verdict = "mixed"
        height = members[0].height if verdict == FEASIBLE else None
        means.append(
            BenchRecord(
                instance_id=instance_id,
                n=n,
                list_size=size,
                algo=algo,
                verdict=verdict,
                height=height,
                elapsed_ms=statistics.fmean(row.elapsed_ms for row in members),
                states_explored=round(
                    statistics.fmean(row.states_explored for row in members)
                ),
                repeat="mean",
            )
        )
    return means


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    """UTF-8 CSV with a header row and LF line endings."""
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for record in records:
        writer.writerow(
            [
                record.instance_id,
                record.n,
                record.list_size,
                record.algo,
                record.verdict,
                "" if record.height is None else record.height,
                f"{record.elapsed_ms:.3f}",
                record.states_explored,
                record.repeat,
            ]
        )
    return buffer.getvalue()
