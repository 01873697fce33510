"""Seeded generators for test and acceptance corpora."""

from __future__ import annotations

import random
from typing import Optional

from .relation import FiniteRelation, transitive_closure


def diamond() -> FiniteRelation:
    return FiniteRelation(4, frozenset({(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)}))


def chain(n: int) -> FiniteRelation:
    return transitive_closure(FiniteRelation(n, frozenset((i, i + 1) for i in range(n - 1))))


def empty(n: int) -> FiniteRelation:
    return FiniteRelation(n)


def random_dag(rng: random.Random, n: int, p: Optional[float] = None) -> FiniteRelation:
    """Forward edges under a hidden random numbering, so IDs carry no order."""
    if p is None:
        p = rng.uniform(0.05, 0.6)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return FiniteRelation(n, frozenset(edges))


def random_poset(rng: random.Random, n: int, p: Optional[float] = None) -> FiniteRelation:
    return transitive_closure(random_dag(rng, n, p))


def poset_corpus(seed: int, count: int, max_n: int, min_n: int = 1) -> list[FiniteRelation]:
    """Hand-picked posets that fit the size range, then ``count`` random closures."""
    rng = random.Random(seed)
    out = [p for p in (empty(3), chain(4), diamond(), empty(1)) if min_n <= p.universe_size <= max_n]
    for _ in range(count):
        out.append(random_poset(rng, rng.randint(min_n, max_n)))
    return out


def poset_with_antichain(rng: random.Random, k: int, extra: int) -> tuple[FiniteRelation, list[int]]:
    """A random poset containing a designated antichain of size ``k``.

    Extra elements are split below and above the antichain; edges only run
    upward (below -> antichain -> above, plus forward within each side), so no
    path joins two antichain members. Labels are shuffled afterwards.
    """
    below = rng.randint(0, extra)
    n = k + extra
    layer = ["below"] * below + ["anti"] * k + ["above"] * (extra - below)
    p = rng.uniform(0.1, 0.5)
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if layer[i] == layer[j] == "anti":
                continue
            if rng.random() < p:
                edges.add((i, j))
    perm = list(range(n))
    rng.shuffle(perm)
    rel = transitive_closure(FiniteRelation(n, frozenset((perm[a], perm[b]) for a, b in edges)))
    antichain = [perm[i] for i in range(n) if layer[i] == "anti"]
    rng.shuffle(antichain)
    return rel, antichain
