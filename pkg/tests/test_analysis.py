import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from strategies import posets
from wellext import corpus, oracles
from wellext.analysis import (
    ZigzagEmbedding,
    all_linear_extensions,
    build_antichain_extension,
    construct_H,
    descends_in,
    forced_inversion_scan,
    iter_linear_extensions,
    one_linear_extension,
    zigzag_value,
)
from wellext.extension import TotalOrder
from wellext.rank import compute_rank
from wellext.relation import FiniteRelation, NotWellFounded, RelationError, is_totally_unordered, transitive_closure
from wellext.tree import sorted_by_L, truncate


class TestEnumeration:
    def test_empty_relation_all_permutations(self):
        assert len(all_linear_extensions(FiniteRelation(3))) == 6

    def test_chain_has_one(self):
        assert [e.order for e in all_linear_extensions(corpus.chain(4))] == [(0, 1, 2, 3)]

    def test_diamond(self, diamond):
        exts = all_linear_extensions(diamond)
        assert [e.order for e in exts] == [(0, 1, 2, 3), (0, 2, 1, 3)]
        assert exts == [e for e in exts if e.source == "enumerated"]

    def test_size_limit(self):
        with pytest.raises(ValueError):
            all_linear_extensions(FiniteRelation(9))
        assert len(all_linear_extensions(corpus.chain(9), limit=9)) == 1

    def test_rejects_non_transitive(self):
        with pytest.raises(RelationError):
            all_linear_extensions(FiniteRelation(3, frozenset({(0, 1), (1, 2)})))

    def test_streams_lazily(self):
        first = next(iter_linear_extensions(FiniteRelation(8)))
        assert first.order == tuple(range(8))

    @settings(max_examples=80)
    @given(posets(max_n=6))
    def test_matches_permutation_filter(self, r):
        got = [e.order for e in all_linear_extensions(r)]
        assert got == oracles.permutation_extensions(r.universe_size, set(r.edges))


class TestOneExtension:
    def test_diamond_ascending(self, diamond):
        ext = one_linear_extension(diamond)
        assert ext.order == (0, 1, 2, 3) and ext.extends(diamond)

    def test_chain(self):
        assert one_linear_extension(corpus.chain(5)).order == (0, 1, 2, 3, 4)

    def test_descending_tie_break(self):
        assert one_linear_extension(FiniteRelation(5), [4, 3, 2, 1, 0]).order == (4, 3, 2, 1, 0)

    def test_rejects_cycle(self):
        with pytest.raises(NotWellFounded):
            one_linear_extension(FiniteRelation(2, frozenset({(0, 1), (1, 0)})))

    @given(posets(max_n=9), st.randoms(use_true_random=False))
    def test_contains_relation(self, r, rnd):
        tie = list(r.elements)
        rnd.shuffle(tie)
        assert one_linear_extension(r, tie).extends(r)


# 0,1,2 minimal; 3 above 0,1; 4 above 1; 5 above 0,2
SIX = FiniteRelation(6, frozenset({(0, 3), (1, 3), (1, 4), (2, 5), (0, 5)}))


class TestH:
    def test_singleton(self, diamond):
        L = one_linear_extension(diamond)
        assert construct_H(diamond, compute_rank(diamond), L, [2]).elements == (2,)

    def test_hand_built_poset(self):
        L = TotalOrder((2, 1, 0, 5, 4, 3))
        assert L.extends(SIX)
        s = [3, 4, 5, 0, 1]
        rk = compute_rank(SIX)
        h = construct_H(SIX, rk, L, s).elements
        replay = oracles.replay_H(dict(enumerate(rk.ranks)), dict(enumerate(L.position)), s)
        assert list(h) == replay == [0, 1]
        assert is_totally_unordered(SIX, h)

    def test_tree_chain_prefix(self):
        tree = truncate(6)
        L = TotalOrder(tuple(sorted_by_L(tree.elements)))
        h = construct_H(tree, compute_rank(tree), L, [13, 29, 61]).elements
        assert h == (13, 29, 61)
        assert is_totally_unordered(tree, h)

    def test_rejects_non_descending(self, diamond):
        L = one_linear_extension(diamond)
        with pytest.raises(RelationError):
            construct_H(diamond, compute_rank(diamond), L, [1, 2])

    def test_rejects_non_extension(self, diamond):
        with pytest.raises(RelationError):
            construct_H(diamond, compute_rank(diamond), TotalOrder((3, 2, 1, 0)), [0])

    @given(posets(max_n=9), st.randoms(use_true_random=False))
    def test_properties(self, r, rnd):
        tie = list(r.elements)
        rnd.shuffle(tie)
        L = one_linear_extension(r, tie)
        picked = rnd.sample(tie, rnd.randint(1, r.universe_size))
        s = sorted(picked, key=lambda x: -L.position[x])
        rk = compute_rank(r)
        h = construct_H(r, rk, L, s).elements
        ranks = [rk[x] for x in h]
        assert ranks == sorted(ranks)
        assert is_totally_unordered(r, h)
        assert set(h) <= set(s)
        assert list(h) == oracles.replay_H(dict(enumerate(rk.ranks)), dict(enumerate(L.position)), s)


class TestZigzag:
    def test_values(self):
        assert [zigzag_value(i) for i in range(7)] == [0, -1, 1, -2, 2, -3, 3]

    @given(st.integers(1, 40))
    def test_injective_and_ray_length(self, k):
        emb = ZigzagEmbedding(tuple(range(k)))
        vals = emb.values
        assert len(set(vals.values())) == k
        ray = emb.descending_ray()
        assert [vals[d] for d in ray] == list(range(0, -len(ray), -1))
        assert len(ray) == k // 2 + 1

    def test_induced_order(self):
        emb = ZigzagEmbedding((7, 8, 9))
        assert emb.pairs() == {(8, 7), (8, 9), (7, 9)}


class TestAntichainExtension:
    def test_empty_relation(self):
        ext, witness = build_antichain_extension(FiniteRelation(4), [0, 1, 2, 3])
        assert witness.elements == (0, 1, 3)
        pos = ext.position
        assert pos[3] < pos[1] < pos[0]
        assert ext.source == "antichain-construction"

    def test_pair(self):
        ext, witness = build_antichain_extension(FiniteRelation(3), [2, 0])
        assert witness.elements == (2, 0) and ext.precedes(0, 2)

    def test_tree_prefix(self):
        tree = truncate(5).restrict(range(62))
        ext, witness = build_antichain_extension(tree, [13, 29, 61])
        assert ext.extends(tree)
        assert witness.elements == (13, 29)
        assert descends_in(ext, witness)

    def test_longer_tree_antichain(self):
        tree = truncate(5)
        leaves = list(range(31, 63))
        for k in (4, 9, 16, 32):
            ext, witness = build_antichain_extension(tree, leaves[:k])
            assert ext.extends(tree) and descends_in(ext, witness)
            assert len(witness) == k // 2 + 1

    def test_rejects_non_antichain(self, diamond):
        with pytest.raises(RelationError):
            build_antichain_extension(diamond, [0, 1])
        with pytest.raises(RelationError):
            build_antichain_extension(diamond, [1])

    def test_restricted_to_D_agrees_with_zigzag(self):
        rng = random.Random(5)
        for k in range(2, 11):
            rel, D = corpus.poset_with_antichain(rng, k, 5)
            ext, _ = build_antichain_extension(rel, D)
            vals = ZigzagEmbedding(tuple(D)).values
            for a, b in itertools.permutations(D, 2):
                assert ext.precedes(a, b) == (vals[a] < vals[b])

    def test_union_closure_acyclic_on_corpus(self):
        rng = random.Random(9)
        for k in range(2, 11):
            for _ in range(5):
                rel, D = corpus.poset_with_antichain(rng, k, rng.randint(0, 8))
                union = FiniteRelation(rel.universe_size, rel.edges | ZigzagEmbedding(tuple(D)).pairs())
                closed = transitive_closure(union)
                assert all(a != b for a, b in closed.edges)


class TestInversionScan:
    def test_chain(self):
        report = forced_inversion_scan(corpus.chain(5))
        assert not report.constructible
        assert report.summary() == "no inversion constructible"

    def test_empty_relation(self):
        report = forced_inversion_scan(FiniteRelation(6))
        assert report.width == 6 and report.witness_length == 4

    def test_tree(self, tree15):
        report = forced_inversion_scan(tree15)
        assert report.width == 8 and report.antichain == tuple(range(7, 15))
        assert report.witness_length == 5
        assert descends_in(report.extension, report.witness)
