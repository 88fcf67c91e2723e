"""Solver run outcomes shared by all three solvers."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Tangle

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
TIMEOUT = "timeout"
MEMOUT = "memout"

VERDICTS = (FEASIBLE, INFEASIBLE, TIMEOUT, MEMOUT)


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solver run.

    ``timeout`` and ``memout`` mean the budget ran out before the search
    could decide either way; they are distinct from ``infeasible``, which is
    only reported once the state space is provably exhausted.
    """

    algorithm: str
    verdict: str
    tangle: Tangle | None
    states_explored: int
    elapsed_seconds: float

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if (self.tangle is not None) != (self.verdict == FEASIBLE):
            raise ValueError("a tangle is attached exactly to feasible verdicts")

    @property
    def feasible(self) -> bool:
        return self.verdict == FEASIBLE

    @property
    def height(self) -> int | None:
        return self.tangle.height if self.tangle is not None else None
