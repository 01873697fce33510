"""The acceptance battery: eight exact, seeded criteria.

Each criterion returns a :class:`CriterionResult`; :func:`run_all` runs them
in order. Every comparison is exact; there are no tolerances to tune.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import corpus, oracles
from .analysis import all_linear_extensions, build_antichain_extension, construct_H, descends_in, one_linear_extension
from .extension import (
    TotalOrder,
    audit_extension,
    choice_least,
    default_choice,
    extend_to_well_order,
    least_element,
)
from .rank import compute_rank, decompose, is_partition
from .relation import is_totally_unordered
from .tree import (
    Cmp,
    chain_s,
    level_nodes,
    literal_L,
    sorted_by_L,
    tree_L_compare,
    truncate,
    verify_tree_properties,
)

SEED = 20240101
RANK_CORPUS_SIZE = 500
RANK_MAX_N = 9
LEAST_CORPUS_SIZE = 50
LEAST_MAX_N = 7
LINEXT_CORPUS_SIZE = 100
LINEXT_MAX_N = 6
ANTICHAIN_SIZES = range(2, 11)
ANTICHAIN_TRIALS = 10
TREE_DEPTH_BOUND = 12
TREE_SAMPLES = 10_000
TIME_BUDGET_S = 60.0


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    checked: int
    failures: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.number}. {self.name}: {self.checked - self.failures}/{self.checked}{extra}"


def _result(number: int, name: str, checked: int, failures: list[str]) -> CriterionResult:
    detail = "; ".join(failures[:3])
    return CriterionResult(number, name, not failures and checked > 0, checked, len(failures), detail)


def rank_corpus():
    return corpus.poset_corpus(SEED, RANK_CORPUS_SIZE, RANK_MAX_N)


def criterion_rank_oracle() -> CriterionResult:
    failures, checked = [], 0
    for i, rel in enumerate(rank_corpus()):
        rk = compute_rank(rel)
        edges = set(rel.edges)
        for t in rel.elements:
            checked += 1
            want = oracles.longest_chain_below(rel.universe_size, edges, t)
            if rk[t] != want:
                failures.append(f"instance {i} element {t}: {rk[t]} != {want}")
    return _result(1, "rank equals longest-chain oracle", checked, failures)


def criterion_decomposition() -> CriterionResult:
    failures, checked = [], 0
    for i, rel in enumerate(rank_corpus()):
        decomp = decompose(rel, compute_rank(rel))
        checked += 1
        if not is_partition(decomp, rel.elements):
            failures.append(f"instance {i}: levels do not partition")
        elif not all(is_totally_unordered(rel, level) for level in decomp.levels):
            failures.append(f"instance {i}: a level is not totally unordered")
    return _result(2, "levels partition and are totally unordered", checked, failures)


def criterion_well_extension() -> CriterionResult:
    failures, checked = [], 0
    for i, rel in enumerate(rank_corpus()):
        rk = compute_rank(rel)
        decomp = decompose(rel, rk)
        choice = default_choice(decomp)
        w = extend_to_well_order(rel, decomp, choice)
        checked += 1
        pos = w.position
        n = rel.universe_size
        if not all(pos[a] < pos[b] for a, b in rel.edges):
            failures.append(f"instance {i}: R not contained in W")
        pairs = w.edges() if n <= 9 else None
        if pairs is not None:
            total = all((x, y) in pairs or (y, x) in pairs for x, y in itertools.combinations(range(n), 2))
            irreflexive = not any((x, x) in pairs for x in range(n))
            transitive = all((x, z) in pairs for (x, y) in pairs for (y2, z) in pairs if y == y2)
            if not (total and irreflexive and transitive):
                failures.append(f"instance {i}: W is not a strict total order")
        if n <= 6:
            checked += 1
            if not audit_extension(rel, decomp, choice, w).union_matches:
                failures.append(f"instance {i}: stage union differs from W")
    return _result(3, "well extension sound, stage audit matches", checked, failures)


def criterion_least_element() -> CriterionResult:
    failures, checked = [], 0
    for i, rel in enumerate(corpus.poset_corpus(SEED + 1, LEAST_CORPUS_SIZE, LEAST_MAX_N)):
        rk = compute_rank(rel)
        decomp = decompose(rel, rk)
        choice = default_choice(decomp, seed=i)
        w = extend_to_well_order(rel, decomp, choice)
        n = rel.universe_size
        for mask in range(1, 1 << n):
            subset = [x for x in range(n) if mask >> x & 1]
            checked += 1
            if least_element(w, subset) != choice_least(rk, choice, subset):
                failures.append(f"instance {i} subset {subset}")
    return _result(4, "least element is choice-least of the lowest level", checked, failures)


def criterion_linear_extensions() -> CriterionResult:
    failures, checked = [], 0
    rels = [corpus.diamond()] + corpus.poset_corpus(SEED + 2, LINEXT_CORPUS_SIZE, LINEXT_MAX_N)
    for i, rel in enumerate(rels):
        checked += 1
        got = [ext.order for ext in all_linear_extensions(rel)]
        want = oracles.permutation_extensions(rel.universe_size, set(rel.edges))
        if got != want:
            failures.append(f"instance {i}: {len(got)} vs {len(want)} extensions")
    checked += 1
    if len(all_linear_extensions(corpus.diamond())) != 2:
        failures.append("diamond does not have exactly 2 extensions")
    return _result(5, "linear extensions match permutation filter", checked, failures)


def criterion_antichain_extension() -> CriterionResult:
    failures, checked = [], 0
    rng = random.Random(SEED + 3)
    for k in ANTICHAIN_SIZES:
        for trial in range(ANTICHAIN_TRIALS):
            rel, D = corpus.poset_with_antichain(rng, k, rng.randint(0, 8))
            checked += 1
            ext, witness = build_antichain_extension(rel, D)
            ok = (
                ext.extends(rel)
                and len(witness) == k // 2 + 1
                and descends_in(ext, witness)
                and witness.elements[0] == D[0]
            )
            if not ok:
                failures.append(f"k={k} trial {trial}")
    return _result(6, "antichain extension forces descent of length k//2+1", checked, failures)


def criterion_H() -> CriterionResult:
    failures, checked = [], 0
    rng = random.Random(SEED + 4)
    instances = []
    for rel in corpus.poset_corpus(SEED + 5, 200, 9, min_n=2):
        tie = list(rel.elements)
        rng.shuffle(tie)
        L = one_linear_extension(rel, tie)
        picked = rng.sample(list(rel.elements), rng.randint(1, rel.universe_size))
        s = sorted(picked, key=lambda x: -L.position[x])
        instances.append((rel, L, s))
    tree_rel = truncate(8)
    tree_order = tuple(sorted_by_L(tree_rel.elements))
    instances.append((tree_rel, TotalOrder(tree_order), [chain_s(k) for k in range(7)]))
    for i, (rel, L, s) in enumerate(instances):
        rk = compute_rank(rel)
        checked += 1
        h = construct_H(rel, rk, L, s).elements
        ranks = [rk[x] for x in h]
        replay = oracles.replay_H(dict(enumerate(rk.ranks)), dict(enumerate(L.position)), list(s))
        if ranks != sorted(ranks) or not is_totally_unordered(rel, h) or list(h) != replay:
            failures.append(f"instance {i}")
    return _result(7, "H has nondecreasing ranks and incomparable range", checked, failures)


def criterion_tree() -> CriterionResult:
    failures, checked = [], 0
    report = verify_tree_properties(TREE_DEPTH_BOUND, TREE_SAMPLES, seed=SEED)
    for name, ok in report.checks.items():
        checked += 1
        if not ok:
            failures.append(name)
    depth = 5
    n = 2 ** (depth + 1) - 1
    literal = literal_L(depth)
    closed = {(x, y) for x in range(n) for y in range(n) if tree_L_compare(x, y) == Cmp.BEFORE}
    checked += 1
    if literal != closed:
        failures.append("closed-form L differs from stagewise construction at depth 5")
    for k in range(20):
        checked += 1
        if tree_L_compare(chain_s(k + 1), chain_s(k)) != Cmp.BEFORE:
            failures.append(f"chain step {k} not descending")
    for k in range(TREE_DEPTH_BOUND):
        checked += 1
        if len(level_nodes(k)) != 2**k:
            failures.append(f"level {k} cardinality")
    return _result(8, "tree certificates", checked, failures)


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_rank_oracle,
    criterion_decomposition,
    criterion_well_extension,
    criterion_least_element,
    criterion_linear_extensions,
    criterion_antichain_extension,
    criterion_H,
    criterion_tree,
]


def run_all(echo: Callable[[str], None] = print) -> list[CriterionResult]:
    start = time.perf_counter()
    results = []
    for crit in CRITERIA:
        res = crit()
        results.append(res)
        echo(res.line())
    elapsed = time.perf_counter() - start
    echo(f"elapsed {elapsed:.1f}s (budget {TIME_BUDGET_S:.0f}s)")
    return results
