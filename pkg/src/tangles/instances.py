"""Instance families and generators.

Four families: the loop family whose realizations all share the same swap
order per wire, the all-ones list realized by pseudo-line arrangements,
random multinomial lists filtered for realizability, and the 3-partition
hardness gadget.

Random generation contract: the generator is CPython's Mersenne Twister
(``random.Random(seed)``); a list of ``total`` swaps is drawn as ``total``
independent ``randrange`` picks over the wire pairs in lexicographic order,
which samples a uniform multinomial.  Identical seeds reproduce identical
lists on any platform.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .core import Pair, SwapList
from .solver_general import is_feasible


def loop_list(n: int) -> SwapList:
    """The order-n loop family list; its minimum height is 3n-4.

    Wires 1..n-2 cross each other once; each of them loops twice around one
    of the two rightmost wires, alternating between wire n (odd wires) and
    wire n-1 (even wires); the two rightmost wires twist n-1 times.
    """
    if n < 4:
        raise ValueError("loop lists need at least 4 wires")
    mult: dict[Pair, int] = {}
    for i, j in itertools.combinations(range(1, n - 1), 2):
        mult[(i, j)] = 1
    for i in range(1, n - 1):
        mult[(i, n if i % 2 else n - 1)] = 2
    mult[(n - 1, n)] = n - 1
    return SwapList.from_mult(n, mult)


def pseudoline_list(n: int) -> SwapList:
    """The all-ones list: every pair of wires crosses exactly once."""
    if n < 1:
        raise ValueError("need at least 1 wire")
    return SwapList(
        n, tuple((i, j, 1) for i, j in itertools.combinations(range(1, n + 1), 2))
    )


@dataclass(frozen=True)
class ThreePartitionInstance:
    """A multiset of 3m positive integers to be split into m equal-sum triples."""

    values: tuple[int, ...]
    strict_range: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.values) % 3 or not self.values:
            raise ValueError("need 3m values for some m >= 1")
        if any(v < 1 for v in self.values):
            raise ValueError("values must be positive")
        if sum(self.values) % self.m:
            raise ValueError("value sum must be divisible by the group count")
        if self.strict_range:
            b = self.target
            if any(not (b / 4 < v < b / 2) for v in self.values):
                raise ValueError("values must lie strictly between B/4 and B/2")

    @property
    def m(self) -> int:
        return len(self.values) // 3

    @property
    def target(self) -> int:
        """The common triple sum B."""
        return sum(self.values) // self.m


@dataclass(frozen=True)
class HardnessGadget:
    """The swap list encoding a 3-partition instance, plus its height bound.

    ``roles`` maps symbolic wire names ("omega", "alpha_2", "beta_prime_1",
    ...) to wire indices so tests can address the construction's parts.
    A tangle of height at most ``height_bound`` realizing ``swaps`` exists
    exactly when the encoded instance has a 3-partition.
    """

    swaps: SwapList
    height_bound: int
    roles: dict[str, int] = field(compare=False)


def hardness_gadget(inst: ThreePartitionInstance) -> HardnessGadget:
    """Encode a 3-partition instance over 12m+2 wires.

    Two inner wires twist 2m times, forming m inner loops; each value v is
    represented by 2·m³·v swaps between a dedicated wire pair that can only
    meet inside an inner loop; heavily weighted outer wires force every
    inner loop to a fixed minimum height, so the loops must share the value
    swaps evenly, which is possible exactly for yes-instances.
    """
    m = inst.m
    values = inst.values
    b = inst.target
    weight = 2 * m**3

    roles: dict[str, int] = {}
    index = 0

    def assign(name: str) -> int:
        nonlocal index
        index += 1
        roles[name] = index
        return index

    gamma = [0] * (m + 1)
    for i in range(1, m + 1):
        gamma[i] = assign(f"gamma_{i}")
    delta = [0] * (m + 1)
    beta = [0] * (m + 1)
    for i in range(m, 0, -1):
        delta[i] = assign(f"delta_{i}")
        beta[i] = assign(f"beta_{i}")
    alpha = [0] * (3 * m + 1)
    for i in range(3 * m, 0, -1):
        alpha[i] = assign(f"alpha_{i}")
    omega = assign("omega")
    omega_prime = assign("omega_prime")
    alpha_p = [0] * (3 * m + 1)
    for i in range(1, 3 * m + 1):
        alpha_p[i] = assign(f"alpha_prime_{i}")
    delta_p = [0] * (m + 1)
    beta_p = [0] * (m + 1)
    gamma_p = [0] * (m + 1)
    for i in range(1, m + 1):
        delta_p[i] = assign(f"delta_prime_{i}")
        beta_p[i] = assign(f"beta_prime_{i}")
        gamma_p[i] = assign(f"gamma_prime_{i}")

    n = index
    mult: dict[Pair, int] = {}

    def add(a: int, c: int, d: int) -> None:
        key = (a, d) if a < d else (d, a)
        mult[key] = mult.get(key, 0) + c

    add(omega, 2 * m, omega_prime)
    for i in range(1, 3 * m + 1):
        add(alpha[i], weight * values[i - 1], alpha_p[i])
        add(alpha[i], 2, omega_prime)
        add(alpha_p[i], 2, omega)
    for i, j in itertools.combinations(range(1, 3 * m + 1), 2):
        add(alpha[i], 2, alpha[j])
        add(alpha_p[i], 2, alpha_p[j])

    left_rigid = [w for i in range(1, m + 1) for w in (beta[i], delta[i])]
    right_rigid = [w for i in range(1, m + 1) for w in (beta_p[i], delta_p[i])]
    for a, c in itertools.combinations(left_rigid, 2):
        add(a, 1, c)
    for a, c in itertools.combinations(right_rigid, 2):
        add(a, 1, c)
    for i in range(1, m + 1):
        add(beta[i], 2, omega)
        add(delta_p[i], 2, omega)
        add(delta[i], 2, omega_prime)
        add(beta_p[i], 2, omega_prime)
        for j in range(1, 3 * m + 1):
            add(beta[i], 2, alpha[j])
            add(delta[i], 2, alpha[j])
            add(beta_p[i], 2, alpha_p[j])
            add(delta_p[i], 2, alpha_p[j])

    for i in range(1, m + 1):
        add(gamma[i], (m - i + 1) * weight * b, beta[i])
        add(gamma_p[i], i * weight * b, beta_p[i])
        for j in range(1, i):
            add(gamma[i], 1, beta[j])
            add(gamma[i], 1, delta[j])
        for j in range(i + 1, m + 1):
            add(gamma_p[i], 1, beta_p[j])
            add(gamma_p[i], 1, delta_p[j])

    height_bound = 2 * m**4 * b + 7 * m**2
    return HardnessGadget(SwapList.from_mult(n, mult), height_bound, roles)


class RandomRejectionError(RuntimeError):
    """Raised when no realizable random list was found within the retry cap."""


def random_list(
    n: int, total: int, seed: int, *, max_rejections: int = 10_000
) -> SwapList:
    """Draw a realizable list with exactly ``total`` swaps over n wires.

    Samples a uniform multinomial over the wire pairs and redraws whenever
    the result is unrealizable.  Deterministic for a fixed seed; raises
    :class:`RandomRejectionError` once ``max_rejections`` draws failed.
    """
    if n < 2:
        raise ValueError("need at least 2 wires")
    if total < 1:
        raise ValueError("need at least 1 swap")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    rng = random.Random(seed)
    for _ in range(max_rejections + 1):
        counts = [0] * len(pairs)
        for _ in range(total):
            counts[rng.randrange(len(pairs))] += 1
        lst = SwapList(
            n, tuple((i, j, c) for (i, j), c in zip(pairs, counts) if c)
        )
        if is_feasible(lst):
            return lst
    raise RandomRejectionError(
        f"no feasible list of {total} swaps over {n} wires in {max_rejections} draws"
    )
