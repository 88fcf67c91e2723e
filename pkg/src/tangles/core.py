"""Algebraic foundations for wire tangles.

A *swap list* over n wires records, for every unordered pair of wires, how
often the two wires must cross.  A *tangle* is a sequence of wire orders
(permutations) in which consecutive orders differ by one set of disjoint
swaps of neighboring wires; it realizes a swap list when every pair crosses
exactly as often as the list prescribes.  This module holds the value types
(SwapList, Permutation, Involution, Tangle) and the structural predicates
and maps shared by all solvers.

Conventions: wires and positions are numbered 1..n.  A permutation is
written as the sequence of wires from the leftmost position to the
rightmost, so ``Permutation((2, 1, 3))`` means wire 2 is leftmost.

All types are immutable values; concurrent readers are safe.
"""
from __future__ import annotations

import functools
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

Pair = tuple[int, int]


def fibonacci(k: int) -> int:
    """k-th Fibonacci number with F(1) = F(2) = 1.

    >>> [fibonacci(k) for k in range(1, 8)]
    [1, 1, 2, 3, 5, 8, 13]
    """
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _validated_pair(pair: Pair, n: int) -> Pair:
    i, j = pair
    if not (1 <= i < j <= n):
        raise ValueError(f"pair {pair!r} is not an ordered wire pair within 1..{n}")
    return (i, j)


@dataclass(frozen=True)
class SwapList:
    """A multiset of swaps over ``n`` wires.

    Stored sparsely as sorted ``(i, j, count)`` triples with ``i < j`` and
    ``count > 0``; pairs that never swap are simply absent.  The triple
    tuple is the canonical hash key used by the solvers.
    """

    n: int
    entries: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("wire count must be at least 1")
        last = None
        for i, j, count in self.entries:
            _validated_pair((i, j), self.n)
            if count <= 0:
                raise ValueError(f"multiplicity of pair {(i, j)} must be positive")
            if last is not None and (i, j) <= last:
                raise ValueError("entries must be strictly sorted by pair")
            last = (i, j)

    @staticmethod
    def zero(n: int) -> SwapList:
        return SwapList(n)

    @staticmethod
    def from_mult(n: int, mult: Mapping[Pair, int]) -> SwapList:
        """Build from a pair -> multiplicity mapping; zero entries are dropped."""
        entries = []
        for pair, count in mult.items():
            i, j = _validated_pair(tuple(pair), n)
            if count < 0:
                raise ValueError(f"negative multiplicity for pair {(i, j)}")
            if count:
                entries.append((i, j, count))
        return SwapList(n, tuple(sorted(entries)))

    @staticmethod
    def from_swaps(n: int, pairs: Iterable[Pair]) -> SwapList:
        """Build from an iterable of pairs counted with multiplicity."""
        counted = Counter(_validated_pair(tuple(p), n) for p in pairs)
        return SwapList(n, tuple(sorted((i, j, c) for (i, j), c in counted.items())))

    @functools.cached_property
    def _mult(self) -> dict[Pair, int]:
        return {(i, j): c for i, j, c in self.entries}

    @functools.cached_property
    def length(self) -> int:
        """Total number of swaps, counted with multiplicity."""
        return sum(c for _, _, c in self.entries)

    def multiplicity(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self._mult.get((i, j), 0)

    def pairs(self) -> tuple[Pair, ...]:
        """The support: pairs with positive multiplicity, sorted."""
        return tuple((i, j) for i, j, _ in self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @functools.cached_property
    def is_simple(self) -> bool:
        """True when every multiplicity is 0 or 1."""
        return all(c == 1 for _, _, c in self.entries)

    @functools.cached_property
    def is_even(self) -> bool:
        """True when every multiplicity is even."""
        return all(c % 2 == 0 for _, _, c in self.entries)

    @functools.cached_property
    def is_odd(self) -> bool:
        """True when every non-zero multiplicity is odd."""
        return all(c % 2 == 1 for _, _, c in self.entries)

    @functools.cached_property
    def is_zero_two(self) -> bool:
        """True when every multiplicity is 0 or 2."""
        return all(c == 2 for _, _, c in self.entries)

    def parity_reduce(self) -> SwapList:
        """Reduce every multiplicity mod 2.  The result is simple."""
        return SwapList(self.n, tuple((i, j, 1) for i, j, c in self.entries if c % 2))

    def cap_reduce(self) -> SwapList:
        """Cap multiplicities at 2, preserving zeroness and parity.

        0 stays 0, odd counts become 1, positive even counts become 2.
        """
        return SwapList(
            self.n,
            tuple((i, j, 1 if c % 2 else 2) for i, j, c in self.entries),
        )

    def is_non_separable(self) -> bool:
        """No swapping pair is separated by a middle wire idle towards both ends.

        Checks that for every i < k < j with positive multiplicity of (i, j),
        at least one of (i, k), (k, j) also has positive multiplicity.
        Necessary for feasibility.
        """
        mult = self._mult
        for i, j, _ in self.entries:
            for k in range(i + 1, j):
                if (i, k) not in mult and (k, j) not in mult:
                    return False
        return True

    def restrict(self, wires: Iterable[int]) -> SwapList:
        """The sublist induced on the given wires, renumbered to 1..len(wires)."""
        kept = sorted(set(wires))
        if not kept:
            raise ValueError("wire subset must be non-empty")
        if kept[0] < 1 or kept[-1] > self.n:
            raise ValueError("wire subset out of range")
        renumber = {w: idx + 1 for idx, w in enumerate(kept)}
        entries = tuple(
            (renumber[i], renumber[j], c)
            for i, j, c in self.entries
            if i in renumber and j in renumber
        )
        return SwapList(len(kept), entries)

    def with_multiplicity(self, i: int, j: int, count: int) -> SwapList:
        """Copy with the multiplicity of one pair replaced."""
        if i > j:
            i, j = j, i
        _validated_pair((i, j), self.n)
        mult = dict(self._mult)
        mult[(i, j)] = count
        return SwapList.from_mult(self.n, mult)

    def is_sublist_of(self, other: SwapList) -> bool:
        if self.n != other.n:
            return False
        return all(c <= other.multiplicity(i, j) for i, j, c in self.entries)

    def matrix(self) -> list[list[int]]:
        """Dense symmetric matrix view with zero diagonal."""
        m = [[0] * self.n for _ in range(self.n)]
        for i, j, c in self.entries:
            m[i - 1][j - 1] = c
            m[j - 1][i - 1] = c
        return m


@dataclass(frozen=True)
class Permutation:
    """A wire order: ``wires[p]`` is the wire occupying position p+1."""

    wires: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.wires)
        if n < 1:
            raise ValueError("permutation must cover at least one wire")
        seen = [False] * n
        for w in self.wires:
            if not (1 <= w <= n) or seen[w - 1]:
                raise ValueError(f"{self.wires!r} is not a permutation of 1..{n}")
            seen[w - 1] = True

    @staticmethod
    def identity(n: int) -> Permutation:
        return Permutation(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.wires)

    @functools.cached_property
    def positions(self) -> tuple[int, ...]:
        """Inverse view: ``positions[w-1]`` is the position of wire w."""
        pos = [0] * len(self.wires)
        for p, w in enumerate(self.wires, start=1):
            pos[w - 1] = p
        return tuple(pos)

    def position_of(self, wire: int) -> int:
        return self.positions[wire - 1]

    def wire_at(self, position: int) -> int:
        return self.wires[position - 1]

    def supports(self, eps: Involution) -> bool:
        """True when every swapped pair occupies neighboring positions."""
        if eps.n != self.n:
            return False
        pos = self.positions
        return all(abs(pos[i - 1] - pos[j - 1]) == 1 for i, j in eps.swaps)

    def apply(self, eps: Involution) -> Permutation:
        """The neighboring order reached by performing one layer of swaps."""
        if not self.supports(eps):
            raise ValueError(f"{self.wires!r} does not support {eps.swaps!r}")
        wires = list(self.wires)
        pos = self.positions
        for i, j in eps.swaps:
            pi, pj = pos[i - 1] - 1, pos[j - 1] - 1
            wires[pi], wires[pj] = wires[pj], wires[pi]
        return Permutation(tuple(wires))


@dataclass(frozen=True)
class Involution:
    """One tangle layer: a non-empty set of disjoint swaps, stored sorted."""

    n: int
    swaps: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if not self.swaps:
            raise ValueError("a layer must contain at least one swap")
        touched: set[int] = set()
        last = None
        for pair in self.swaps:
            i, j = _validated_pair(pair, self.n)
            if last is not None and pair <= last:
                raise ValueError("swaps must be strictly sorted")
            if i in touched or j in touched:
                raise ValueError(f"wire reused across swaps in {self.swaps!r}")
            touched.update((i, j))
            last = pair

    @staticmethod
    def from_pairs(n: int, pairs: Iterable[Pair]) -> Involution:
        return Involution(n, tuple(sorted(tuple(sorted(p)) for p in pairs)))

    @property
    def size(self) -> int:
        return len(self.swaps)


@dataclass(frozen=True)
class Tangle:
    """A sequence of wire orders in which consecutive orders are adjacent.

    The height is the number of orders; between consecutive orders lies one
    layer of disjoint swaps, recoverable via :attr:`layers`.
    """

    perms: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if not self.perms:
            raise ValueError("a tangle contains at least one permutation")
        n = self.perms[0].n
        for perm in self.perms:
            if perm.n != n:
                raise ValueError("all permutations must have the same wire count")
        for a, b in zip(self.perms, self.perms[1:]):
            if layer_between(a, b) is None:
                raise ValueError(
                    f"consecutive orders {a.wires!r} and {b.wires!r} are not adjacent"
                )

    @property
    def n(self) -> int:
        return self.perms[0].n

    @property
    def height(self) -> int:
        return len(self.perms)

    @functools.cached_property
    def layers(self) -> tuple[Involution, ...]:
        out = []
        for a, b in zip(self.perms, self.perms[1:]):
            eps = layer_between(a, b)
            assert eps is not None
            out.append(eps)
        return tuple(out)

    def swap_list(self) -> SwapList:
        """The list realized by this tangle: every layer's swaps, counted."""
        return SwapList.from_swaps(
            self.n, (pair for eps in self.layers for pair in eps.swaps)
        )

    def is_simple(self) -> bool:
        """True when no wire order repeats."""
        return len(set(self.perms)) == len(self.perms)


def apply_list(perm: Permutation, lst: SwapList) -> tuple[int, ...]:
    """Final position of every wire after performing all swaps of ``lst``.

    Entry w-1 is the position wire w ends up in when starting from ``perm``.
    The result need not be a bijection; see :func:`is_consistent`.  Only the
    parity of each multiplicity matters.  Runs in time linear in n plus the
    number of listed pairs.
    """
    if perm.n != lst.n:
        raise ValueError("permutation and list have different wire counts")
    pos = perm.positions
    final = list(pos)
    for i, j, c in lst.entries:
        if c % 2:
            if pos[i - 1] < pos[j - 1]:
                final[i - 1] += 1
                final[j - 1] -= 1
            else:
                final[i - 1] -= 1
                final[j - 1] += 1
    return tuple(final)


def is_consistent(perm: Permutation, lst: SwapList) -> bool:
    """True when the final-position map of ``lst`` from ``perm`` is a bijection.

    Necessary for the list to be realizable from ``perm``.
    """
    final = apply_list(perm, lst)
    n = lst.n
    seen = [False] * n
    for p in final:
        if p < 1 or p > n or seen[p - 1]:
            return False
        seen[p - 1] = True
    return True


def permutation_after(perm: Permutation, lst: SwapList) -> Permutation | None:
    """The wire order reached after all swaps, or None if not a bijection."""
    final = apply_list(perm, lst)
    n = lst.n
    wires = [0] * n
    for w, p in enumerate(final, start=1):
        if p < 1 or p > n or wires[p - 1]:
            return None
        wires[p - 1] = w
    return Permutation(tuple(wires))


def inversion_list(perm: Permutation) -> SwapList:
    """The simple list marking every wire pair that is out of order.

    This is the unique simple list leading from the identity order to
    ``perm``: ``apply_list(identity, inversion_list(perm))`` recovers it.

    >>> inversion_list(Permutation((2, 1, 3))).pairs()
    ((1, 2),)
    """
    pos = perm.positions
    n = perm.n
    entries = tuple(
        (i, j, 1)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if pos[i - 1] > pos[j - 1]
    )
    return SwapList(n, entries)


@functools.lru_cache(maxsize=None)
def nonadjacent_position_sets(mask: int) -> tuple[tuple[int, ...], ...]:
    """All non-empty sets of pairwise non-adjacent positions drawn from a bitmask.

    ``mask`` marks candidate left positions (0-based) of neighboring swaps; two
    chosen positions must differ by at least 2 so the swaps stay disjoint.
    Sets are emitted in lexicographic order of their ascending position tuples,
    which fixes the canonical layer order used by all solvers.
    """
    positions = []
    p = 0
    m = mask
    while m:
        if m & 1:
            positions.append(p)
        m >>= 1
        p += 1

    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], start: int) -> None:
        for idx in range(start, len(positions)):
            q = positions[idx]
            if prefix and q <= prefix[-1] + 1:
                continue
            chosen = prefix + (q,)
            out.append(chosen)
            extend(chosen, idx + 1)

    extend((), 0)
    return tuple(out)


def _full_mask(n: int) -> int:
    return (1 << (n - 1)) - 1


def supported_involutions(perm: Permutation) -> tuple[Involution, ...]:
    """Every layer performable from ``perm``, in canonical order.

    A permutation over n wires supports exactly ``fibonacci(n + 1) - 1``
    layers.  Ordering is lexicographic in the leftmost positions touched.
    """
    n = perm.n
    if n < 2:
        return ()
    wires = perm.wires
    out = []
    for combo in nonadjacent_position_sets(_full_mask(n)):
        pairs = tuple(
            sorted(
                (wires[p], wires[p + 1]) if wires[p] < wires[p + 1] else (wires[p + 1], wires[p])
                for p in combo
            )
        )
        out.append(Involution(n, pairs))
    return tuple(out)


def layer_between(a: Permutation, b: Permutation) -> Involution | None:
    """The unique layer turning ``a`` into ``b``, or None if not adjacent."""
    if a.n != b.n:
        raise ValueError("permutations have different wire counts")
    aw, bw = a.wires, b.wires
    if aw == bw:
        return None
    pairs = []
    p = 0
    n = a.n
    while p < n:
        if aw[p] == bw[p]:
            p += 1
            continue
        if p + 1 >= n or aw[p] != bw[p + 1] or aw[p + 1] != bw[p]:
            return None
        x, y = aw[p], aw[p + 1]
        pairs.append((x, y) if x < y else (y, x))
        p += 2
    return Involution(n, tuple(sorted(pairs)))


@dataclass(frozen=True)
class Block:
    """A contiguous band of wires whose swaps are independent of the rest.

    ``wires`` are the original labels in ascending order; ``swaps`` is the
    induced sublist renumbered to 1..len(wires).
    """

    wires: tuple[int, ...]
    swaps: SwapList


def split_free_wires(lst: SwapList) -> tuple[Block, ...] | None:
    """Split a list into independent contiguous blocks, or report infeasibility.

    A wire that takes part in no swap can never move; if some swap spans
    such a wire the list is unrealizable and None is returned.  Otherwise
    the wires are cut at every boundary no swap spans, and each block's
    induced sublist is returned for independent solving.
    """
    n = lst.n
    participating = [False] * (n + 1)
    spanned = [False] * n  # spanned[b] for the boundary between wires b and b+1
    for i, j, _ in lst.entries:
        participating[i] = True
        participating[j] = True
        for b in range(i, j):
            spanned[b] = True
    for i, j, _ in lst.entries:
        for k in range(i + 1, j):
            if not participating[k]:
                return None
    blocks = []
    start = 1
    for b in range(1, n + 1):
        if b == n or not spanned[b]:
            wires = tuple(range(start, b + 1))
            blocks.append(Block(wires, lst.restrict(wires)))
            start = b + 1
    return tuple(blocks)
