from hypothesis import strategies as st

from wellext.relation import FiniteRelation, transitive_closure


@st.composite
def relations(draw, max_n: int = 7) -> FiniteRelation:
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return FiniteRelation(0)
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    return FiniteRelation(n, frozenset(draw(st.sets(pairs, max_size=n * n))))


@st.composite
def dags(draw, max_n: int = 8) -> FiniteRelation:
    """Acyclic relations with IDs scrambled by a drawn permutation."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    perm = draw(st.permutations(range(n)))
    forward = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(forward), max_size=len(forward)))
    return FiniteRelation(n, frozenset((perm[i], perm[j]) for (i, j), keep in zip(forward, chosen) if keep))


@st.composite
def posets(draw, max_n: int = 8) -> FiniteRelation:
    return transitive_closure(draw(dags(max_n)))
