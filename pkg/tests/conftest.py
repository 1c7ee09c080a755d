import pytest

from cremona import build_graph, invert, random_cremona_degree2


def build_corpus(seeds):
    """Seeded degree-2 Cremona sets spanning all circuit lengths up to 7."""
    out = []
    for r in (1, 3, 5, 7):
        low = 3 if r == 1 else r
        for n in range(low, 13):
            for seed in seeds:
                out.append(random_cremona_degree2(n, r, seed))
    return out


@pytest.fixture(scope="session")
def corpus():
    sets = build_corpus(range(15))
    assert len(sets) >= 500
    return sets


@pytest.fixture(scope="session")
def corpus_data(corpus):
    return [(mset, build_graph(mset), invert(mset)) for mset in corpus]


@pytest.fixture(scope="session")
def small_corpus():
    return build_corpus(range(2))
