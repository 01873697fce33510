"""The countably infinite binary tree on the naturals, as computable predicates.

Node ``n`` has children ``2n+1`` and ``2n+2``; the strict order is "is a
proper ancestor of". ``n + 1`` written in binary is the root-to-node path
(leading 1, then 0 for the left child and 1 for the right), which gives
levels and ancestors in O(1).

The linear extension ``L`` puts the subtree of a larger-numbered node of a
level ahead of the subtree of every smaller-numbered node of the same level.
It extends the ancestor order but is not a well order: ``2^(n+2) - 3`` is an
infinite descending chain.
"""

from __future__ import annotations

import enum
import functools
import random
from dataclasses import dataclass, field

import numpy as np

from .relation import FiniteRelation, transitive_closure

#: largest natural handled; results beyond it raise OverflowError
MAX_NATURAL = 2**63 - 1
TRUNCATE_LIMIT = 16


class Cmp(str, enum.Enum):
    BEFORE = "before"
    EQUAL = "equal"
    AFTER = "after"


def _check(x: int) -> int:
    if x < 0 or x > MAX_NATURAL:
        raise OverflowError(f"{x} is outside 0..2^63-1")
    return x


def tree_level(x: int) -> int:
    return (_check(x) + 1).bit_length() - 1


def parent(x: int) -> int:
    if _check(x) == 0:
        raise ValueError("the root has no parent")
    return (x - 1) // 2


def ancestor_at(x: int, level: int) -> int:
    """The ancestor of ``x`` on ``level`` (``x`` itself at its own level)."""
    lx = tree_level(x)
    if not 0 <= level <= lx:
        raise ValueError(f"level {level} is not above node {x} (level {lx})")
    return ((x + 1) >> (lx - level)) - 1


def level_nodes(n: int) -> range:
    """All nodes on level ``n``: ``2^n - 1 .. 2^(n+1) - 2``."""
    _check(2 ** (n + 1) - 2)
    return range(2**n - 1, 2 ** (n + 1) - 1)


def tree_related(x: int, y: int) -> bool:
    lx, ly = tree_level(x), tree_level(y)
    return lx < ly and ((y + 1) >> (ly - lx)) - 1 == x


def tree_L_compare(x: int, y: int) -> Cmp:
    if x == y:
        _check(x)
        return Cmp.EQUAL
    lx, ly = tree_level(x), tree_level(y)
    m = min(lx, ly)
    ax = ((x + 1) >> (lx - m)) - 1
    ay = ((y + 1) >> (ly - m)) - 1
    if ax == ay:
        # one is an ancestor of the other; ancestors come first
        return Cmp.BEFORE if lx < ly else Cmp.AFTER
    # ancestors on one level keep their relative order on every deeper level
    return Cmp.BEFORE if ax > ay else Cmp.AFTER


_SIGN = {Cmp.BEFORE: -1, Cmp.EQUAL: 0, Cmp.AFTER: 1}


def sorted_by_L(nodes) -> list[int]:
    return sorted(nodes, key=functools.cmp_to_key(lambda a, b: _SIGN[tree_L_compare(a, b)]))


def chain_s(n: int) -> int:
    """Term ``n`` of the descending chain: ``2^(n+2) - 3``."""
    if n < 0:
        raise ValueError("chain index must be a natural number")
    if n + 2 > 63:
        raise OverflowError(f"chain term {n} exceeds 2^63-1")
    return 2 ** (n + 2) - 3


def truncate(depth: int, limit: int = TRUNCATE_LIMIT) -> FiniteRelation:
    """Ancestor order on the first ``depth + 1`` levels (``2^(depth+1) - 1`` nodes)."""
    if depth < 0 or depth > limit:
        raise ValueError(f"truncation depth must lie in 0..{limit}")
    n = 2 ** (depth + 1) - 1
    edges = set()
    for y in range(1, n):
        x = y
        while x:
            x = (x - 1) // 2
            edges.add((x, y))
    return FiniteRelation(n, frozenset(edges))


def child_edges(depth: int) -> FiniteRelation:
    """Just the parent-child pairs on the first ``depth + 1`` levels."""
    n = 2 ** (depth + 1) - 1
    edges = {(p, c) for p in range(n) for c in (2 * p + 1, 2 * p + 2) if c < n}
    return FiniteRelation(n, frozenset(edges))


def literal_L(depth: int) -> frozenset[tuple[int, int]]:
    """Materialize ``L`` on a truncation from its stagewise definition.

    Stage ``n`` relates every node below-or-equal to a larger node of level
    ``n`` to every node below-or-equal to a smaller node of level ``n``. The
    union of the stages with the ancestor order (closed generically from the
    child pairs) is returned.
    """
    closed = transitive_closure(child_edges(depth))
    desc = {x: {x} | {y for (a, y) in closed.edges if a == x} for x in closed.elements}
    pairs = set(closed.edges)
    for n in range(depth + 1):
        level = sorted(level_nodes(n))
        for i, lo in enumerate(level):
            for hi in level[i + 1:]:
                pairs.update((a, b) for a in desc[hi] for b in desc[lo])
    return frozenset(pairs)


def _levels_np(a: np.ndarray) -> np.ndarray:
    # frexp exponent of a+1 is its bit length; exact below 2^53
    return np.frexp((a + 1).astype(np.float64))[1].astype(np.int64) - 1


def related_matrix(count: int) -> np.ndarray:
    """``M[x, y] = tree_related(x, y)`` for all ``x, y < count``, vectorized per column."""
    nodes = np.arange(count, dtype=np.int64)
    lv = _levels_np(nodes)
    out = np.zeros((count, count), dtype=bool)
    for y in range(count):
        gap = lv[y] - lv
        shifted = (y + 1) >> np.clip(gap, 0, 62)
        out[:, y] = (gap > 0) & (shifted - 1 == nodes)
    return out


@dataclass
class TreeReport:
    depth_bound: int
    sample_count: int
    max_rank: int = 0
    checks: dict[str, bool] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and not self.violations

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and passed
        if not passed:
            self.violations.append(f"{name}: {detail}" if detail else name)

    def as_dict(self) -> dict:
        return {
            "depth_bound": self.depth_bound,
            "sample_count": self.sample_count,
            "rank_range": f"unbounded within range (max rank = {self.max_rank})",
            "checks": self.checks,
            "violations": self.violations,
            "ok": self.ok,
        }


def verify_tree_properties(depth_bound: int, sample_count: int, seed: int = 0) -> TreeReport:
    """Check the tree's structural properties on every node below ``2^depth_bound``.

    Random pairs and triples (``sample_count`` each) probe ``L`` for totality,
    asymmetry, transitivity and containment of the ancestor order.
    """
    count = 2**depth_bound
    report = TreeReport(depth_bound, sample_count)

    # ancestors and depths by walking parent links only
    path_level = [0] * count
    by_path = np.zeros((count, count), dtype=bool)
    for y in range(1, count):
        path_level[y] = path_level[(y - 1) // 2] + 1
        x = y
        while x:
            x = (x - 1) // 2
            by_path[x, y] = True

    closed_form = related_matrix(count)
    report.record("(a) related pairs have a child path", bool(np.array_equal(closed_form, by_path)))
    xs, ys = np.nonzero(closed_form)
    report.record("(b) related implies numerically smaller", bool(np.all(xs < ys)))
    probe = random.Random(seed)
    for _ in range(min(sample_count, 2000)):
        x, y = probe.randrange(count), probe.randrange(count)
        if tree_related(x, y) != bool(closed_form[x, y]):
            report.record("(a) related pairs have a child path", False, f"scalar/vector mismatch at {(x, y)}")

    levels = [tree_level(x) for x in range(count)]
    report.max_rank = max(levels)
    report.record("(c) rank grows without bound", report.max_rank == depth_bound)
    membership = all(
        lv == pl and 2**lv - 1 <= x <= 2 ** (lv + 1) - 2 for x, (lv, pl) in enumerate(zip(levels, path_level))
    )
    report.record("(d) level membership", membership)
    for n in range(depth_bound):
        members = [x for x in range(count) if levels[x] == n]
        if len(members) != 2**n or members != list(level_nodes(n)):
            report.record("(d) level cardinality", False, f"level {n} has {len(members)} nodes")
    report.checks.setdefault("(d) level cardinality", True)

    terms = [chain_s(k) for k in range(62) if chain_s(k) < count]
    unordered = all(not tree_related(a, b) for a in terms for b in terms)
    report.record("(e) chain terms pairwise incomparable", unordered)

    rng = random.Random(seed)
    for name in ("L total and asymmetric", "L transitive", "L extends R"):
        report.checks[name] = True
    for _ in range(sample_count):
        x, y, z = (rng.randrange(count) for _ in range(3))
        cxy, cyx = tree_L_compare(x, y), tree_L_compare(y, x)
        expected = {Cmp.BEFORE: Cmp.AFTER, Cmp.AFTER: Cmp.BEFORE, Cmp.EQUAL: Cmp.EQUAL}[cxy]
        if cyx != expected or (cxy == Cmp.EQUAL) != (x == y):
            report.record("L total and asymmetric", False, f"{(x, y)}")
        if cxy == Cmp.BEFORE and tree_L_compare(y, z) == Cmp.BEFORE and tree_L_compare(x, z) != Cmp.BEFORE:
            report.record("L transitive", False, f"{(x, y, z)}")
        if y:
            anc = y
            for _ in range(rng.randrange(1, path_level[y] + 1)):
                anc = (anc - 1) // 2
            if tree_L_compare(anc, y) != Cmp.BEFORE:
                report.record("L extends R", False, f"{(anc, y)}")
    return report
