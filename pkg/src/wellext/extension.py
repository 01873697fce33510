"""Extending a partial well ordering to a well order.

Elements of lower rank come first; inside a level, a per-level choice order
decides. The result is stored as a permutation of the universe. The stage
relations whose union is the well order can be rebuilt explicitly for audit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .rank import Decomposition, RankFunction, compute_rank, decompose
from .relation import (
    Edge,
    FiniteRelation,
    RelationError,
    require_well_founded,
    transitive_closure,
)

AUDIT_LIMIT = 6


class ChoiceMismatch(RelationError):
    pass


@dataclass(frozen=True)
class ChoiceOrder:
    """One enumeration (without repetition) per decomposition level."""

    levels: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TotalOrder:
    """Strict total order on ``0..n-1``: earlier position precedes."""

    order: tuple[int, ...]
    source: str = field(default="well-extension", compare=False)

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise RelationError("order must be a permutation of the universe")

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, x in enumerate(self.order):
            pos[x] = i
        return tuple(pos)

    def __len__(self) -> int:
        return len(self.order)

    def precedes(self, x: int, y: int) -> bool:
        return self.position[x] < self.position[y]

    def edges(self) -> frozenset[Edge]:
        """The order as an explicit set of pairs (quadratic; for audits)."""
        xs = self.order
        return frozenset((xs[i], xs[j]) for i in range(len(xs)) for j in range(i + 1, len(xs)))

    def extends(self, rel: FiniteRelation) -> bool:
        pos = self.position
        return len(pos) == rel.universe_size and all(pos[a] < pos[b] for a, b in rel.edges)

    def as_relation(self) -> FiniteRelation:
        return FiniteRelation(len(self.order), self.edges())


def default_choice(decomp: Decomposition, seed: Optional[int] = None) -> ChoiceOrder:
    """Ascending IDs per level, or a reproducible shuffle.

    With a seed, one ``random.Random(seed)`` is created and each level's
    ascending list is shuffled by it in turn, lowest level first.
    """
    if seed is None:
        return ChoiceOrder(tuple(tuple(sorted(level)) for level in decomp.levels))
    rng = random.Random(seed)
    levels = []
    for level in decomp.levels:
        seq = sorted(level)
        rng.shuffle(seq)
        levels.append(tuple(seq))
    return ChoiceOrder(tuple(levels))


def extend_to_well_order(rel: FiniteRelation, decomp: Decomposition, choice: ChoiceOrder) -> TotalOrder:
    """Order by the key (rank, position within the level's choice sequence)."""
    if len(choice.levels) != len(decomp.levels):
        raise ChoiceMismatch(f"choice has {len(choice.levels)} levels, decomposition {len(decomp.levels)}")
    for alpha, (seq, level) in enumerate(zip(choice.levels, decomp.levels)):
        if len(seq) != len(level) or set(seq) != set(level):
            raise ChoiceMismatch(f"choice for level {alpha} is not a permutation of it")
    order = tuple(x for seq in choice.levels for x in seq)
    if len(order) != rel.universe_size:
        raise ChoiceMismatch("decomposition does not cover the relation's universe")
    return TotalOrder(order)


def least_element(w: TotalOrder, subset: Iterable[int]) -> int:
    members = list(subset)
    if not members:
        raise ValueError("least element of an empty subset")
    return min(members, key=w.position.__getitem__)


def choice_least(rk: RankFunction, choice: ChoiceOrder, subset: Iterable[int]) -> int:
    """Least element as built in the well-ordering argument.

    Take the least rank ``sigma`` met by the subset, then the choice-least
    member of ``subset`` inside level ``sigma``.
    """
    members = set(subset)
    if not members:
        raise ValueError("least element of an empty subset")
    sigma = min(rk[x] for x in members)
    return next(x for x in choice.levels[sigma] if x in members)


def well_extend_from_well_founded(rel: FiniteRelation, seed: Optional[int] = None) -> TotalOrder:
    require_well_founded(rel)
    closed = transitive_closure(rel)
    rk = compute_rank(closed)
    decomp = decompose(closed, rk)
    return extend_to_well_order(closed, decomp, default_choice(decomp, seed))


def stage_relations(decomp: Decomposition, choice: ChoiceOrder) -> list[frozenset[Edge]]:
    """Each stage: the level's chosen order plus (all lower levels) x (the level)."""
    stages = []
    below: list[int] = []
    for seq in choice.levels:
        inner = {(seq[i], seq[j]) for i in range(len(seq)) for j in range(i + 1, len(seq))}
        across = {(x, y) for x in below for y in seq}
        stages.append(frozenset(inner | across))
        below.extend(seq)
    return stages


@dataclass(frozen=True)
class AuditReport:
    stage_edge_counts: tuple[int, ...]
    union_matches: bool


def audit_extension(
    rel: FiniteRelation, decomp: Decomposition, choice: ChoiceOrder, w: TotalOrder, limit: int = AUDIT_LIMIT
) -> AuditReport:
    """Rebuild every stage relation and compare their union with ``w``."""
    if rel.universe_size > limit:
        raise ValueError(f"audit is limited to {limit} elements, got {rel.universe_size}")
    stages = stage_relations(decomp, choice)
    union = frozenset().union(*stages)
    return AuditReport(tuple(len(s) for s in stages), union == w.edges())
