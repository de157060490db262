import pytest

from flagnef.corpus import iter_hn_types


@pytest.fixture(scope="session")
def corpus():
    """Every HN type with total rank <= 6 and piece degrees in [-4, 4]."""
    return tuple(iter_hn_types(max_rank=6, max_abs_degree=4))


@pytest.fixture(scope="session")
def corpus_pairs(corpus):
    """All (type, quotient dimension) pairs over the corpus."""
    return tuple((h, r) for h in corpus for r in range(1, h.rank))
