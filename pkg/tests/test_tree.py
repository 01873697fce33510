import pytest
from hypothesis import given, strategies as st

from wellext.rank import compute_rank
from wellext.relation import transitive_closure
from wellext.tree import (
    MAX_NATURAL,
    Cmp,
    ancestor_at,
    chain_s,
    child_edges,
    level_nodes,
    literal_L,
    parent,
    related_matrix,
    tree_L_compare,
    tree_level,
    tree_related,
    truncate,
    verify_tree_properties,
)

nodes = st.integers(min_value=0, max_value=2**40)


def ancestors_by_parent(y):
    out = []
    while y:
        y = (y - 1) // 2
        out.append(y)
    return out


class TestLevels:
    @pytest.mark.parametrize("x, level", [(0, 0), (1, 1), (2, 1), (6, 2), (2**10 - 1, 10), (2**11 - 2, 10)])
    def test_examples(self, x, level):
        assert tree_level(x) == level

    @given(nodes)
    def test_bounds(self, x):
        n = tree_level(x)
        assert 2**n - 1 <= x <= 2 ** (n + 1) - 2
        assert n == len(ancestors_by_parent(x))

    def test_level_sets(self):
        assert list(level_nodes(2)) == [3, 4, 5, 6]
        for n in range(12):
            assert len(level_nodes(n)) == 2**n

    def test_overflow(self):
        with pytest.raises(OverflowError):
            tree_level(MAX_NATURAL + 1)
        with pytest.raises(OverflowError):
            tree_level(-1)

    def test_parent(self):
        assert parent(5) == parent(6) == 2
        with pytest.raises(ValueError):
            parent(0)


class TestRelated:
    def test_examples(self):
        assert tree_related(0, 5)
        assert not tree_related(1, 6)
        assert not tree_related(4, 4)

    @given(nodes, nodes)
    def test_matches_parent_iteration(self, x, y):
        assert tree_related(x, y) == (x in ancestors_by_parent(y))
        if tree_related(x, y):
            assert x < y

    @given(nodes)
    def test_ancestor_at(self, y):
        chain = [y] + ancestors_by_parent(y)
        assert [ancestor_at(y, k) for k in range(tree_level(y), -1, -1)] == chain

    def test_matrix_matches_scalar(self):
        m = related_matrix(64)
        assert all(m[x, y] == tree_related(x, y) for x in range(64) for y in range(64))


class TestCompare:
    def test_examples(self):
        assert tree_L_compare(1, 2) == Cmp.AFTER
        assert tree_L_compare(2, 1) == Cmp.BEFORE
        assert tree_L_compare(13, 5) == Cmp.BEFORE
        assert tree_L_compare(7, 7) == Cmp.EQUAL
        assert all(tree_L_compare(0, k) == Cmp.BEFORE for k in range(1, 200))

    @given(nodes, nodes)
    def test_antisymmetric_total(self, x, y):
        a, b = tree_L_compare(x, y), tree_L_compare(y, x)
        assert (a == Cmp.EQUAL) == (x == y)
        assert {a, b} in ({Cmp.EQUAL}, {Cmp.BEFORE, Cmp.AFTER})

    @given(nodes, nodes, nodes)
    def test_transitive(self, x, y, z):
        if tree_L_compare(x, y) == Cmp.BEFORE and tree_L_compare(y, z) == Cmp.BEFORE:
            assert tree_L_compare(x, z) == Cmp.BEFORE

    @given(nodes, nodes)
    def test_extends_ancestor_order(self, x, y):
        if tree_related(x, y):
            assert tree_L_compare(x, y) == Cmp.BEFORE

    @pytest.mark.parametrize("depth", range(6))
    def test_matches_stagewise_construction(self, depth):
        n = 2 ** (depth + 1) - 1
        literal = literal_L(depth)
        closed = {(x, y) for x in range(n) for y in range(n) if tree_L_compare(x, y) == Cmp.BEFORE}
        assert literal == closed

    def test_strict_descendants_leave_siblings_unrelated(self):
        # stage pairs built from proper descendants only never touch 1 and 2
        closed = transitive_closure(child_edges(3))
        desc = {x: {y for a, y in closed.edges if a == x} for x in closed.elements}
        pairs = set(closed.edges)
        for n in range(4):
            level = list(level_nodes(n))
            for i, lo in enumerate(level):
                for hi in level[i + 1:]:
                    pairs |= {(a, b) for a in desc[hi] for b in desc[lo]}
        assert (1, 2) not in pairs and (2, 1) not in pairs


class TestChain:
    def test_values(self):
        assert [chain_s(n) for n in range(4)] == [1, 5, 13, 29]

    def test_descending(self):
        assert all(tree_L_compare(chain_s(n + 1), chain_s(n)) == Cmp.BEFORE for n in range(60))

    def test_pairwise_incomparable(self):
        terms = [chain_s(n) for n in range(40)]
        assert not any(tree_related(a, b) for a in terms for b in terms)

    def test_overflow(self):
        assert chain_s(61) == 2**63 - 3
        with pytest.raises(OverflowError):
            chain_s(62)


class TestTruncate:
    def test_small(self):
        assert truncate(0).universe_size == 1 and not truncate(0).edges
        assert truncate(1).edges == {(0, 1), (0, 2)}

    def test_ranks_are_levels(self):
        for d in range(6):
            r = truncate(d)
            assert compute_rank(r).ranks == tuple(tree_level(x) for x in r.elements)
            assert r == transitive_closure(child_edges(d))

    def test_bound(self):
        with pytest.raises(ValueError):
            truncate(17)


class TestVerify:
    def test_depth_zero(self):
        report = verify_tree_properties(0, 10)
        assert report.ok and report.max_rank == 0

    def test_depth_twelve(self):
        report = verify_tree_properties(12, 10_000)
        assert report.ok, report.violations
        assert report.max_rank == 12
        assert report.as_dict()["rank_range"] == "unbounded within range (max rank = 12)"
