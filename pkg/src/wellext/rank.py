"""Relative ranks of a partial well ordering and the level decomposition.

On a finite carrier the ordinal rank of ``t`` (the set of ranks of its
predecessors) is identified with its size, which is the length of the longest
chain strictly below ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .relation import (
    FiniteRelation,
    NotTransitive,
    iter_bits,
    require_well_founded,
    transitivity_gap,
)


@dataclass(frozen=True)
class RankFunction:
    ranks: tuple[int, ...]

    @property
    def lam(self) -> int:
        """Number of distinct ranks (ranks used are exactly ``0..lam-1``)."""
        return max(self.ranks) + 1 if self.ranks else 0

    def __getitem__(self, x: int) -> int:
        return self.ranks[x]

    def __len__(self) -> int:
        return len(self.ranks)


@dataclass(frozen=True)
class Decomposition:
    """Level sets ``M_0 .. M_{lam-1}``, each sorted ascending."""

    levels: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.levels)

    def level_of(self) -> dict[int, int]:
        return {x: a for a, level in enumerate(self.levels) for x in level}


def compute_rank(rel: FiniteRelation) -> RankFunction:
    """Rank every element of a transitive, well-founded relation.

    Non-transitive input is refused, not repaired; close it first with
    :func:`wellext.relation.transitive_closure`.
    """
    gap = transitivity_gap(rel)
    if gap is not None:
        raise NotTransitive(gap)
    order = require_well_founded(rel)
    ranks = [0] * rel.universe_size
    # elimination order visits every predecessor before its successors
    for t in order:
        preds = rel.pred_mask[t]
        if preds:
            ranks[t] = 1 + max(ranks[x] for x in iter_bits(preds))
    return RankFunction(tuple(ranks))


def verify_rank_witness(rel: FiniteRelation, rk: RankFunction) -> bool:
    """Check that every smaller rank is realized by some predecessor.

    For all x, y with rank(x) < rank(y) there must be z with rank(z) = rank(x)
    and z R y.
    """
    used = set(rk.ranks)
    for y in rel.elements:
        below = {rk[z] for z in iter_bits(rel.pred_mask[y])}
        if not {a for a in used if a < rk[y]} <= below:
            return False
    return True


def rank_invariants_hold(rel: FiniteRelation, rk: RankFunction) -> bool:
    """Edges strictly increase rank, and the used ranks form ``0..lam-1``."""
    if any(rk[a] >= rk[b] for a, b in rel.edges):
        return False
    return set(rk.ranks) == set(range(rk.lam))


def decompose(rel: FiniteRelation, rk: RankFunction) -> Decomposition:
    if len(rk) != rel.universe_size:
        raise ValueError("rank function does not cover the relation's universe")
    levels: list[list[int]] = [[] for _ in range(rk.lam)]
    for x in rel.elements:
        levels[rk[x]].append(x)
    return Decomposition(tuple(tuple(level) for level in levels))


def is_partition(decomp: Decomposition, universe: Iterable[int]) -> bool:
    seen: set[int] = set()
    for level in decomp.levels:
        if not level or seen.intersection(level):
            return False
        seen.update(level)
    return seen == set(universe)
