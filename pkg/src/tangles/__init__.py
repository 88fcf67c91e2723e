"""Tangle-height minimization toolkit.

Given n wires in a fixed initial order and a multiset prescribing how often
every pair of wires must swap, decide whether some tangle realizes the
multiset and, if so, compute one of minimum height.  Ships exact solvers
for simple and general lists, a reference search-tree solver, feasibility
oracles for structured lists, instance generators, a diagram renderer and
a benchmark harness.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .core import (
    Block,
    Involution,
    Pair,
    Permutation,
    SwapList,
    Tangle,
    apply_list,
    fibonacci,
    inversion_list,
    is_consistent,
    layer_between,
    permutation_after,
    split_free_wires,
    supported_involutions,
)
from .feasibility import (
    ConjectureReport,
    FeasibilityVerdict,
    check_rich_even_list,
    connecting_tangle,
    feasible_even,
    feasible_odd,
    feasible_simple,
    minimize_even_list,
    odd_equivalences_agree,
    verify_even_conjecture,
)
from .fileio import (
    FormatError,
    parse_list,
    parse_tangle,
    serialize_list,
    serialize_tangle,
)
from .instances import (
    HardnessGadget,
    RandomRejectionError,
    ThreePartitionInstance,
    hardness_gadget,
    loop_list,
    pseudoline_list,
    random_list,
)
from .render import RenderSpec, render
from .reports import FEASIBLE, INFEASIBLE, MEMOUT, TIMEOUT, SolveReport
from .solver_baseline import solve_baseline
from .solver_general import is_feasible, solve_general
from .solver_simple import solve_simple

__all__ = [
    "Block",
    "ConjectureReport",
    "FEASIBLE",
    "FeasibilityVerdict",
    "FormatError",
    "HardnessGadget",
    "INFEASIBLE",
    "Involution",
    "MEMOUT",
    "Pair",
    "Permutation",
    "RandomRejectionError",
    "RenderSpec",
    "SolveReport",
    "SwapList",
    "TIMEOUT",
    "Tangle",
    "ThreePartitionInstance",
    "apply_list",
    "check_rich_even_list",
    "connecting_tangle",
    "feasible_even",
    "feasible_odd",
    "feasible_simple",
    "fibonacci",
    "hardness_gadget",
    "inversion_list",
    "is_consistent",
    "is_feasible",
    "layer_between",
    "loop_list",
    "minimize_even_list",
    "odd_equivalences_agree",
    "parse_list",
    "parse_tangle",
    "permutation_after",
    "pseudoline_list",
    "random_list",
    "render",
    "serialize_list",
    "serialize_tangle",
    "solve_baseline",
    "solve_general",
    "solve_simple",
    "split_free_wires",
    "supported_involutions",
    "verify_even_conjecture",
]
