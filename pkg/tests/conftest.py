import pytest

from wellext import corpus
from wellext.relation import FiniteRelation, transitive_closure
from wellext.tree import child_edges


@pytest.fixture
def diamond() -> FiniteRelation:
    return corpus.diamond()


@pytest.fixture
def tree7() -> FiniteRelation:
    """Closure of the child relation on nodes 0..6."""
    return transitive_closure(child_edges(2))


@pytest.fixture
def tree15() -> FiniteRelation:
    return transitive_closure(child_edges(3))
