"""Finite strict binary relations over a dense integer carrier ``0..n-1``.

Successor and predecessor sets are kept as Python ints used as bitsets, so
closure and reachability work stays cheap for the sizes this package
targets (a few thousand elements at most).
"""

from __future__ import annotations

import heapq
import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Literal, Optional, Sequence

import networkx as nx

Edge = tuple[int, int]

#: subsets above this size use the chain-cover dual instead of exhaustive search
EXHAUSTIVE_ANTICHAIN_LIMIT = 20


class RelationError(ValueError):
    """Base class for malformed relations and violated preconditions."""


class ParseError(RelationError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class NotTransitive(RelationError):
    def __init__(self, missing: Edge):
        self.missing = missing
        super().__init__(f"relation is not transitive: missing edge {missing}")


class NotWellFounded(RelationError):
    def __init__(self, witness: "WitnessChain"):
        self.witness = witness
        super().__init__(f"relation is not well-founded: cycle {list(witness.elements)}")


@dataclass(frozen=True)
class WitnessChain:
    """A finite sequence certifying a property of a relation.

    ``descending``: ``(elements[i+1], elements[i])`` is an edge for every i.
    ``cycle``: ``(elements[i], elements[i+1 mod k])`` is an edge for every i.
    ``antichain``: distinct members are pairwise incomparable.
    """

    kind: Literal["descending", "cycle", "antichain"]
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def certifies(self, rel: "FiniteRelation") -> bool:
        xs = self.elements
        if self.kind == "descending":
            return all(rel.related(b, a) for a, b in zip(xs, xs[1:]))
        if self.kind == "cycle":
            return bool(xs) and all(
                rel.related(xs[i], xs[(i + 1) % len(xs)]) for i in range(len(xs))
            )
        return len(set(xs)) == len(xs) and is_totally_unordered(rel, xs)


@dataclass(frozen=True)
class FiniteRelation:
    """The structure ``<A, R>`` with ``A = {0, ..., universe_size - 1}``."""

    universe_size: int
    edges: frozenset[Edge] = frozenset()
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.universe_size < 0:
            raise RelationError("universe size must be non-negative")
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        n = self.universe_size
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise RelationError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if self.labels is not None and len(self.labels) != n:
            raise RelationError("label table must name every element")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels=None) -> "FiniteRelation":
        return cls(n, frozenset(edges), None if labels is None else tuple(labels))

    @property
    def elements(self) -> range:
        return range(self.universe_size)

    @cached_property
    def succ_mask(self) -> tuple[int, ...]:
        masks = [0] * self.universe_size
        for a, b in self.edges:
            masks[a] |= 1 << b
        return tuple(masks)

    @cached_property
    def pred_mask(self) -> tuple[int, ...]:
        masks = [0] * self.universe_size
        for a, b in self.edges:
            masks[b] |= 1 << a
        return tuple(masks)

    def related(self, x: int, y: int) -> bool:
        return (x, y) in self.edges

    def successors(self, x: int) -> list[int]:
        return list(iter_bits(self.succ_mask[x]))

    def predecessors(self, x: int) -> list[int]:
        return list(iter_bits(self.pred_mask[x]))

    def field_elements(self) -> frozenset[int]:
        """Elements that occur as an endpoint of some edge."""
        return frozenset(itertools.chain.from_iterable(self.edges))

    def label(self, x: int) -> str | int:
        return x if self.labels is None else self.labels[x]

    def restrict(self, keep: Iterable[int]) -> "FiniteRelation":
        """Induced relation on ``keep``, renumbered densely in ascending order."""
        keep = sorted(set(keep))
        index = {x: i for i, x in enumerate(keep)}
        edges = {(index[a], index[b]) for a, b in self.edges if a in index and b in index}
        return FiniteRelation(len(keep), frozenset(edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_edge_list(self) -> str:
        lines = [str(self.universe_size)]
        lines += [f"{a} {b}" for a, b in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(xs: Iterable[int]) -> int:
    mask = 0
    for x in xs:
        mask |= 1 << x
    return mask


_LINE = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def parse_relation(text: str) -> FiniteRelation:
    """Parse the edge-list format.

    The first nonblank line holds the universe size; every later nonblank line
    is ``a b`` meaning ``a R b``. ``#`` starts a comment.
    """
    n = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.isdigit():
                raise ParseError(f"expected universe size, got {line!r}", lineno)
            n = int(line)
            continue
        m = _LINE.match(line)
        if m is None:
            raise ParseError(f"expected 'a b', got {line!r}", lineno)
        a, b = int(m.group(1)), int(m.group(2))
        if a >= n or b >= n:
            raise ParseError(f"endpoint out of universe 0..{n - 1}: {a} {b}", lineno)
        edges.add((a, b))
    if n is None:
        raise ParseError("missing universe size")
    return FiniteRelation(n, frozenset(edges))


def is_irreflexive(rel: FiniteRelation) -> bool:
    return not any(a == b for a, b in rel.edges)


def is_transitive(rel: FiniteRelation) -> bool:
    return transitivity_gap(rel) is None


def transitivity_gap(rel: FiniteRelation) -> Optional[Edge]:
    """Return some pair forced by transitivity but absent, or None."""
    succ = rel.succ_mask
    for a, b in sorted(rel.edges):
        extra = succ[b] & ~succ[a]
        if extra:
            return (a, next(iter_bits(extra)))
    return None


def elimination_order(rel: FiniteRelation) -> tuple[list[int], int]:
    """Repeatedly remove minimal elements, smallest ID first.

    Returns the removal order and the bitmask of elements that could never
    be removed (empty exactly when the relation is well-founded).
    """
    indegree = [bin(m).count("1") for m in rel.pred_mask]
    heap = [x for x in rel.elements if indegree[x] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        x = heapq.heappop(heap)
        order.append(x)
        for y in iter_bits(rel.succ_mask[x]):
            indegree[y] -= 1
            if indegree[y] == 0:
                heapq.heappush(heap, y)
    stuck = ((1 << rel.universe_size) - 1) & ~bits_to_mask(order)
    return order, stuck


def _cycle_in(rel: FiniteRelation, stuck: int) -> WitnessChain:
    # every stuck element has a stuck predecessor, so walking back must repeat
    x = next(iter_bits(stuck))
    seen: dict[int, int] = {}
    walk = []
    while x not in seen:
        seen[x] = len(walk)
        walk.append(x)
        x = next(iter_bits(rel.pred_mask[x] & stuck))
    back = walk[seen[x]:]
    forward = back[::-1]
    start = forward.index(min(forward))
    return WitnessChain("cycle", tuple(forward[start:] + forward[:start]))


def is_well_founded(rel: FiniteRelation) -> bool | WitnessChain:
    """True, or a cycle witness when some nonempty subset lacks a minimal element."""
    _, stuck = elimination_order(rel)
    if stuck:
        return _cycle_in(rel, stuck)
    return True


def require_well_founded(rel: FiniteRelation) -> list[int]:
    order, stuck = elimination_order(rel)
    if stuck:
        raise NotWellFounded(_cycle_in(rel, stuck))
    return order


def minimal_elements(rel: FiniteRelation, subset: Iterable[int]) -> frozenset[int]:
    members = bits_to_mask(subset)
    return frozenset(t for t in iter_bits(members) if not rel.pred_mask[t] & members)


def transitive_closure(rel: FiniteRelation) -> FiniteRelation:
    succ = list(rel.succ_mask)
    n = rel.universe_size
    for k in range(n):
        bit = 1 << k
        reach_k = succ[k]
        for i in range(n):
            if succ[i] & bit:
                succ[i] |= reach_k
    edges = frozenset((a, b) for a in range(n) for b in iter_bits(succ[a]))
    return FiniteRelation(n, edges, rel.labels)


def find_descending_chain(rel: FiniteRelation, max_len: int) -> Optional[WitnessChain]:
    """Unroll a cycle into a descending chain of ``max_len`` elements."""
    verdict = is_well_founded(rel)
    if verdict is True:
        return None
    cyc = verdict.elements
    k = len(cyc)
    return WitnessChain("descending", tuple(cyc[(-i) % k] for i in range(max_len)))


def are_incomparable(rel: FiniteRelation, x: int, y: int) -> bool:
    return x != y and not rel.related(x, y) and not rel.related(y, x)


def is_totally_unordered(rel: FiniteRelation, subset: Iterable[int]) -> bool:
    members = sorted(set(subset))
    return all(are_incomparable(rel, x, y) for x, y in itertools.combinations(members, 2))


def require_partial_well_order(rel: FiniteRelation) -> None:
    gap = transitivity_gap(rel)
    if gap is not None:
        raise NotTransitive(gap)
    require_well_founded(rel)


def max_antichain(rel: FiniteRelation, exhaustive_limit: int = EXHAUSTIVE_ANTICHAIN_LIMIT) -> frozenset[int]:
    """A maximum totally unordered subset of a partial well ordering.

    Up to ``exhaustive_limit`` elements this is a complete branch-and-bound
    search returning the lexicographically first maximum; above it, the
    antichain is read off a minimum chain cover (Dilworth/Konig).
    """
    require_partial_well_order(rel)
    if rel.universe_size <= exhaustive_limit:
        return _antichain_search(rel)
    return _antichain_by_matching(rel)


def _antichain_search(rel: FiniteRelation) -> frozenset[int]:
    n = rel.universe_size
    comparable = [rel.succ_mask[x] | rel.pred_mask[x] for x in range(n)]
    best: list[int] = []

    def grow(chosen: list[int], candidates: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + bin(candidates).count("1") <= len(best):
            return
        for x in iter_bits(candidates):
            candidates &= ~(1 << x)
            chosen.append(x)
            grow(chosen, candidates & ~comparable[x])
            chosen.pop()
            if len(chosen) + bin(candidates).count("1") <= len(best):
                return

    grow([], (1 << n) - 1)
    return frozenset(best)


def _antichain_by_matching(rel: FiniteRelation) -> frozenset[int]:
    n = rel.universe_size
    graph = nx.Graph()
    left = [("L", x) for x in range(n)]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("R", x) for x in range(n)), bipartite=1)
    graph.add_edges_from((("L", a), ("R", b)) for a, b in rel.edges)
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    cover = nx.bipartite.to_vertex_cover(graph, matching, top_nodes=left)
    return frozenset(x for x in range(n) if ("L", x) not in cover and ("R", x) not in cover)


def to_dot(rel: FiniteRelation, ranks: Optional[Sequence[int]] = None) -> str:
    """Graphviz text; nodes are filled by rank when ranks are given."""
    palette = ("lightblue", "palegreen", "khaki", "lightpink", "plum", "lightsalmon", "lightgrey")
    out = ["digraph R {"]
    for x in rel.elements:
        attrs = [f'label="{rel.label(x)}"']
        if ranks is not None:
            attrs += ["style=filled", f'fillcolor="{palette[ranks[x] % len(palette)]}"', f'rank="{ranks[x]}"']
        out.append(f"  {x} [{', '.join(attrs)}];")
    for a, b in rel.sorted_edges():
        out.append(f"  {a} -> {b};")
    out.append("}")
    return "\n".join(out) + "\n"
