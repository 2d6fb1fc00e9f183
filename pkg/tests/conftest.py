import pytest

from skewek.families import power_of_maximal_ideal, random_stable_ideal, s_n_ideal


def _random_corpus(count=200, max_gens=20):
    """Seeded random stable ideals: n cycles 1..5, degree cap cycles 2..6.

    Seeds are scanned in order and closures with more than max_gens
    generators are skipped, so the corpus is deterministic.
    """
    out = []
    seen = set()
    k = 0
    while len(out) < count:
        n = 1 + k % 5
        deg_cap = 2 + (k // 5) % 5
        gen_count = 1 + (k // 25) % 3
        I = random_stable_ideal(n, seed=k, gen_count=gen_count, deg_cap=deg_cap)
        k += 1
        if len(I.generators) > max_gens:
            continue
        key = (I.n, I.generators)
        if key in seen:
            continue
        seen.add(key)
        out.append(I)
    return out


@pytest.fixture(scope="session")
def random_corpus():
    return _random_corpus()


@pytest.fixture(scope="session")
def family_corpus():
    powers = [power_of_maximal_ideal(n, d) for n in range(1, 5) for d in range(1, 5)]
    chains = [s_n_ideal(n) for n in range(1, 6)]
    return powers + chains


@pytest.fixture(scope="session")
def corpus(random_corpus, family_corpus):
    return random_corpus + family_corpus
