"""Brute-force reference computations.

Everything here is deliberately naive: exhaustive DFS, permutation filters and
subset enumeration over plain edge sets. None of it calls into the bitset
machinery it is used to check.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

Edge = tuple[int, int]


def reachable_pairs(n: int, edges: Iterable[Edge]) -> set[Edge]:
    adj: dict[int, list[int]] = {x: [] for x in range(n)}
    for a, b in edges:
        adj[a].append(b)
    out = set()
    for s in range(n):
        stack, seen = list(adj[s]), set()
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            out.add((s, v))
            stack.extend(adj[v])
    return out


def longest_chain_below(n: int, edges: set[Edge], t: int) -> int:
    """Length of the longest edge path ending at ``t``, by exhaustive DFS (no memo)."""
    preds = [a for a, b in edges if b == t]
    return max((1 + longest_chain_below(n, edges, x) for x in preds), default=0)


def has_cycle(n: int, edges: set[Edge]) -> bool:
    """Search every sequence of distinct elements for a closed edge path."""
    for k in range(1, n + 1):
        for cyc in itertools.permutations(range(n), k):
            if cyc[0] != min(cyc):
                continue
            if all((cyc[i], cyc[(i + 1) % k]) in edges for i in range(k)):
                return True
    return False


def permutation_extensions(n: int, edges: set[Edge]) -> list[tuple[int, ...]]:
    out = []
    for perm in itertools.permutations(range(n)):
        pos = {x: i for i, x in enumerate(perm)}
        if all(pos[a] < pos[b] for a, b in edges):
            out.append(perm)
    return out


def max_antichain_size(n: int, edges: set[Edge]) -> int:
    best = 0
    for mask in range(1 << n):
        members = [x for x in range(n) if mask >> x & 1]
        if len(members) <= best:
            continue
        if all((a, b) not in edges and (b, a) not in edges for a, b in itertools.combinations(members, 2)):
            best = len(members)
    return best


def minimal_by_scan(edges: set[Edge], subset: Iterable[int]) -> set[int]:
    members = set(subset)
    return {t for t in members if not any((x, t) in edges for x in members)}


def replay_H(
    ranks: dict[int, int], position: dict[int, int], s: list[int]
) -> list[int]:
    """The rank-minimal recursion, recomputed by sorting whole candidate lists."""
    def least(cands: list[int]) -> Optional[int]:
        return sorted(cands, key=lambda x: (ranks[x], x))[0] if cands else None

    out = [least(list(s))]
    while True:
        nxt = least([x for x in s if position[x] < position[out[-1]]])
        if nxt is None:
            return out
        out.append(nxt)
