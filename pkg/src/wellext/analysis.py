"""Linear extensions of finite partial well orderings.

Covers enumeration, single extensions by minimal-element elimination, the
rank-minimal antichain subsequence of a descending sequence, and extensions
forced to run an antichain backwards along a zigzag integer embedding.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .extension import TotalOrder
from .rank import RankFunction
from .relation import (
    FiniteRelation,
    RelationError,
    WitnessChain,
    iter_bits,
    is_irreflexive,
    is_totally_unordered,
    max_antichain,
    require_partial_well_order,
    require_well_founded,
    transitive_closure,
    transitivity_gap,
)

ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class LinearExtension(TotalOrder):
    source: str = "topological"


def iter_linear_extensions(rel: FiniteRelation, limit: int = ENUMERATION_LIMIT) -> Iterator[LinearExtension]:
    """Yield every linear extension in lexicographic order of the permutation."""
    n = rel.universe_size
    if n > limit:
        raise ValueError(f"enumeration is limited to {limit} elements, got {n}")
    if not is_irreflexive(rel) or transitivity_gap(rel) is not None:
        raise RelationError("linear extensions need a strict partial order")
    pred = rel.pred_mask
    prefix: list[int] = []

    def extend(placed: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in range(n):
            if not (placed >> x) & 1 and pred[x] & ~placed == 0:
                prefix.append(x)
                yield from extend(placed | (1 << x))
                prefix.pop()

    for order in extend(0):
        yield LinearExtension(order, "enumerated")


def all_linear_extensions(rel: FiniteRelation, limit: int = ENUMERATION_LIMIT) -> list[LinearExtension]:
    return list(iter_linear_extensions(rel, limit))


def one_linear_extension(rel: FiniteRelation, tie_break: Optional[Sequence[int]] = None) -> LinearExtension:
    """Minimal-element elimination, preferring elements early in ``tie_break``.

    ``tie_break`` defaults to ascending IDs.
    """
    require_well_founded(rel)
    n = rel.universe_size
    preference = list(range(n)) if tie_break is None else list(tie_break)
    if sorted(preference) != list(range(n)):
        raise ValueError("tie_break must list every element exactly once")
    rank_of = {x: i for i, x in enumerate(preference)}
    indegree = [bin(m).count("1") for m in rel.pred_mask]
    heap = [(rank_of[x], x) for x in range(n) if indegree[x] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, x = heapq.heappop(heap)
        order.append(x)
        for y in iter_bits(rel.succ_mask[x]):
            indegree[y] -= 1
            if indegree[y] == 0:
                heapq.heappush(heap, (rank_of[y], y))
    return LinearExtension(tuple(order), "topological")


def construct_H(rel: FiniteRelation, rk: RankFunction, L: TotalOrder, s: Sequence[int]) -> WitnessChain:
    """Pull a pairwise incomparable subsequence out of a descending sequence.

    ``H(0)`` is the lowest-rank member of ``s``; ``H(k+1)`` is the lowest-rank
    member of ``s`` that precedes ``H(k)`` in ``L``. Ties go to the smaller
    element ID, and the recursion stops once no member precedes ``H(k)``.
    """
    if not L.extends(rel):
        raise RelationError("L does not extend the relation")
    if len(set(s)) != len(s):
        raise RelationError("sequence elements must be distinct")
    if any(not L.precedes(b, a) for a, b in zip(s, s[1:])):
        raise RelationError("sequence is not descending in L")
    pool = set(s)

    def least(candidates: set[int]) -> int:
        return min(candidates, key=lambda x: (rk[x], x))

    h = [least(pool)]
    while True:
        below = {x for x in pool if L.precedes(x, h[-1])}
        if not below:
            break
        h.append(least(below))
    return WitnessChain("antichain", tuple(h))


def zigzag_value(i: int) -> int:
    """Position ``i`` of the listing 0, -1, 1, -2, 2, ..."""
    return -((i + 1) // 2) if i % 2 else i // 2


@dataclass(frozen=True)
class ZigzagEmbedding:
    domain: tuple[int, ...]

    @property
    def values(self) -> dict[int, int]:
        return {d: zigzag_value(i) for i, d in enumerate(self.domain)}

    def pairs(self) -> set[tuple[int, int]]:
        """The induced strict order on the domain, as edges."""
        vals = self.values
        return {(a, b) for a in self.domain for b in self.domain if vals[a] < vals[b]}

    def descending_ray(self) -> tuple[int, ...]:
        """Elements mapped to 0, -1, -2, ... in that order."""
        return tuple(self.domain[i] for i in range(len(self.domain)) if i == 0 or i % 2)


def build_antichain_extension(rel: FiniteRelation, D: Sequence[int]) -> tuple[LinearExtension, WitnessChain]:
    """A linear extension that runs the antichain ``D`` down its zigzag ray.

    The zigzag order on ``D`` is added to the relation, the union is closed
    and checked acyclic, then extended by ascending-ID elimination.
    """
    require_partial_well_order(rel)
    D = tuple(D)
    if len(D) < 2:
        raise RelationError("antichain must have at least two elements")
    if len(set(D)) != len(D) or not is_totally_unordered(rel, D):
        raise RelationError(f"{list(D)} is not an antichain of the relation")
    emb = ZigzagEmbedding(D)
    union = FiniteRelation(rel.universe_size, rel.edges | emb.pairs())
    closed = transitive_closure(union)
    if not is_irreflexive(closed):
        raise AssertionError("closure of the zigzag order with the relation has a cycle")
    ext = one_linear_extension(closed)
    witness = WitnessChain("descending", emb.descending_ray())
    return LinearExtension(ext.order, "antichain-construction"), witness


@dataclass(frozen=True)
class InversionReport:
    width: int
    antichain: tuple[int, ...]
    witness_length: int
    witness: Optional[WitnessChain]
    extension: Optional[LinearExtension]

    @property
    def constructible(self) -> bool:
        return self.witness is not None

    def summary(self) -> str:
        if not self.constructible:
            return "no inversion constructible"
        return f"width {self.width}: descending witness of length {self.witness_length}"


def forced_inversion_scan(rel: FiniteRelation, exhaustive_limit: Optional[int] = None) -> InversionReport:
    """Longest descent the zigzag construction can force, using a widest antichain."""
    kw = {} if exhaustive_limit is None else {"exhaustive_limit": exhaustive_limit}
    anti = tuple(sorted(max_antichain(rel, **kw)))
    w = len(anti)
    if w < 2:
        return InversionReport(w, anti, 0, None, None)
    ext, witness = build_antichain_extension(rel, anti)
    return InversionReport(w, anti, len(witness), witness, ext)


def descends_in(order: TotalOrder, witness: WitnessChain) -> bool:
    xs = witness.elements
    return all(order.precedes(b, a) for a, b in zip(xs, xs[1:]))

